//! The instances every theorem is run against.

use wdl_core::dicomplement::{enumerate, ComplementSide};
use wdl_core::lattice::small_lattices;
use wdl_core::Dicomplementation;

use crate::builtin::builtin;

pub struct Instance {
    pub name: String,
    pub algebra: Dicomplementation,
}

fn small_name(n: usize, k: usize) -> String {
    format!("lattice-{n}.{k}")
}

/// L6, L7, B2, B4, B8 and the trivial dicomplementation on every lattice
/// with at most five elements.
pub fn named_and_trivial() -> Vec<Instance> {
    let mut out: Vec<Instance> = ["L6", "L7", "B2", "B4", "B8"]
        .iter()
        .map(|&n| Instance { name: n.to_string(), algebra: builtin(n).expect("fixed builtin") })
        .collect();
    for n in 1..=5 {
        for (k, l) in small_lattices(n).into_iter().enumerate() {
            out.push(Instance {
                name: format!("{}-trivial", small_name(n, k)),
                algebra: Dicomplementation::trivial(l),
            });
        }
    }
    out
}

/// Every weak complementation (Δ only) on every lattice with at most five
/// elements.
pub fn enumerated_weak_complementations() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for (k, l) in small_lattices(n).into_iter().enumerate() {
            let ds = enumerate(&l, ComplementSide::Delta, 8).expect("within cap");
            for (j, d) in ds.into_iter().enumerate() {
                out.push(Instance { name: format!("{}-delta-{j}", small_name(n, k)), algebra: d });
            }
        }
    }
    out
}

/// Every full dicomplementation on every lattice with at most five elements.
pub fn enumerated_dicomplementations() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for (k, l) in small_lattices(n).into_iter().enumerate() {
            let ds = enumerate(&l, ComplementSide::Both, 8).expect("within cap");
            for (j, d) in ds.into_iter().enumerate() {
                out.push(Instance { name: format!("{}-both-{j}", small_name(n, k)), algebra: d });
            }
        }
    }
    out
}

/// The full corpus: named, trivial, and enumerated Δ-only instances.
pub fn corpus() -> Vec<Instance> {
    let mut out = named_and_trivial();
    out.extend(enumerated_weak_complementations());
    out
}
