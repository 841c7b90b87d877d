//! Named reference instances.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::dicomplement::Dicomplementation;
use crate::lattice::{BoundedLattice, LatticeSpec};

fn spec(elements: &[&str], covers: &[(&str, &str)]) -> LatticeSpec {
    LatticeSpec {
        elements: elements.iter().map(|e| e.to_string()).collect(),
        covers: covers.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        delta: None,
        nabla: None,
    }
}

/// The six-element lattice `2 × 3` with elements `0 u v a b 1`.
pub fn l6_lattice() -> BoundedLattice {
    let s = spec(
        &["0", "u", "v", "a", "b", "1"],
        &[("0", "u"), ("0", "v"), ("u", "a"), ("v", "a"), ("v", "b"), ("a", "1"), ("b", "1")],
    );
    BoundedLattice::from_spec(&s, 64).expect("L6 is a lattice")
}

/// The seven-element lattice with elements `0 u v a b w 1`.
pub fn l7_lattice() -> BoundedLattice {
    let s = spec(
        &["0", "u", "v", "a", "b", "w", "1"],
        &[("0", "u"), ("0", "w"), ("0", "v"), ("u", "a"), ("w", "a"), ("w", "b"), ("v", "b"), ("a", "1"), ("b", "1")],
    );
    BoundedLattice::from_spec(&s, 64).expect("L7 is a lattice")
}

pub const L6_DELTA: [(&str, &str); 6] = [("0", "1"), ("u", "b"), ("v", "1"), ("a", "b"), ("b", "u"), ("1", "0")];
pub const L6_NABLA: [(&str, &str); 6] = [("0", "1"), ("u", "v"), ("v", "u"), ("a", "0"), ("b", "0"), ("1", "0")];

pub const L7_DELTA: [(&str, &str); 7] =
    [("0", "1"), ("u", "1"), ("v", "1"), ("a", "b"), ("b", "a"), ("w", "1"), ("1", "0")];
pub const L7_NABLA: [(&str, &str); 7] =
    [("0", "1"), ("u", "v"), ("v", "u"), ("a", "0"), ("b", "0"), ("w", "0"), ("1", "0")];

pub fn l6() -> Dicomplementation {
    Dicomplementation::from_named(l6_lattice(), Some(&L6_DELTA), Some(&L6_NABLA)).expect("L6 tables are valid")
}

pub fn l7() -> Dicomplementation {
    Dicomplementation::from_named(l7_lattice(), Some(&L7_DELTA), Some(&L7_NABLA)).expect("L7 tables are valid")
}

/// The Boolean algebra with `2^k` elements.
pub fn boolean(k: usize) -> Dicomplementation {
    let l = BoundedLattice::boolean(k, 64).expect("Boolean lattice within cap");
    Dicomplementation::boolean(l).expect("Boolean lattice")
}

/// The `n`-element chain with the trivial dicomplementation.
pub fn chain_trivial(n: usize) -> Dicomplementation {
    Dicomplementation::trivial(BoundedLattice::chain(n).expect("nonempty chain"))
}

/// Names of the filters of `L6` in enumeration order.
pub fn l6_filter_names() -> Vec<Vec<&'static str>> {
    alloc::vec![
        alloc::vec!["1"],
        alloc::vec!["a", "1"],
        alloc::vec!["b", "1"],
        alloc::vec!["u", "a", "1"],
        alloc::vec!["v", "a", "b", "1"],
        alloc::vec!["0", "u", "v", "a", "b", "1"],
    ]
}
