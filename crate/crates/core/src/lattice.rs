//! Finite bounded lattices stored as dense order matrices with eager meet/join tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::set::ElementSet;

/// Hard upper bound on carrier size (one machine word per element set).
pub const MAX_ELEMENTS: usize = 64;

/// Declarative description of a finite lattice: names, cover pairs and
/// optional unary tables given as `(input, output)` name pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeSpec {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub delta: Option<Vec<(String, String)>>,
    pub nabla: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    Empty,
    DuplicateElement(String),
    UnknownElement(String),
    /// The order is not reflexive, antisymmetric and transitive; `a`, `b` locate the defect.
    NotAPoset {
        a: String,
        b: String,
        defect: &'static str,
    },
    NotBounded,
    /// The pair has no unique `op` ("meet" or "join").
    NotALattice {
        a: String,
        b: String,
        op: &'static str,
    },
    SizeCapExceeded {
        size: usize,
        cap: usize,
    },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::Empty => write!(f, "lattice has no elements"),
            LatticeError::DuplicateElement(x) => write!(f, "duplicate element `{x}`"),
            LatticeError::UnknownElement(x) => write!(f, "unknown element `{x}`"),
            LatticeError::NotAPoset { a, b, defect } => {
                write!(f, "not a partial order ({defect}) at ({a}, {b})")
            }
            LatticeError::NotBounded => write!(f, "order has no unique bottom and top"),
            LatticeError::NotALattice { a, b, op } => {
                write!(f, "elements {a} and {b} have no unique {op}")
            }
            LatticeError::SizeCapExceeded { size, cap } => {
                write!(f, "size {size} exceeds cap {cap}")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// A validated finite bounded lattice.
///
/// Elements are dense indices `0..len()`; names are kept for I/O only.
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedLattice {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl BoundedLattice {
    /// Builds a lattice from a cover description. The order is the
    /// reflexive-transitive closure of the covers.
    pub fn from_spec(spec: &LatticeSpec, cap: usize) -> Result<Self, LatticeError> {
        let n = spec.elements.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        check_cap(n, cap)?;
        let index = index_names(&spec.elements)?;
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for (lo, hi) in &spec.covers {
            let l = lookup(&index, lo)?;
            let h = lookup(&index, hi)?;
            up[l].insert(h);
        }
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        Self::from_order(spec.elements.clone(), up)
    }

    /// Builds a lattice from explicit up-sets: `up[a]` is `{x | a <= x}`.
    pub fn from_order(names: Vec<String>, up: Vec<ElementSet>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        check_cap(n, MAX_ELEMENTS)?;
        assert_eq!(up.len(), n, "one up-set per element");
        let index = index_names(&names)?;
        let carrier = ElementSet::full(n);
        let name = |i: usize| names[i].clone();
        for (a, u) in up.iter().enumerate() {
            if !u.is_subset(carrier) {
                return Err(LatticeError::UnknownElement(format!("#{}", u.bits())));
            }
            if !u.contains(a) {
                return Err(LatticeError::NotAPoset { a: name(a), b: name(a), defect: "reflexivity" });
            }
        }
        for (a, &u) in up.iter().enumerate() {
            for b in u.iter() {
                if b != a && up[b].contains(a) {
                    return Err(LatticeError::NotAPoset { a: name(a), b: name(b), defect: "antisymmetry" });
                }
                if !up[b].is_subset(u) {
                    let c = up[b].difference(u).first().unwrap_or(b);
                    return Err(LatticeError::NotAPoset { a: name(a), b: name(c), defect: "transitivity" });
                }
            }
        }
        let mut down = vec![ElementSet::EMPTY; n];
        for (a, u) in up.iter().enumerate() {
            for b in u.iter() {
                down[b].insert(a);
            }
        }
        let bottom = (0..n).find(|&a| up[a] == carrier).ok_or(LatticeError::NotBounded)?;
        let top = (0..n).find(|&a| down[a] == carrier).ok_or(LatticeError::NotBounded)?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower = down[a].intersection(down[b]);
                meet[a * n + b] = lower
                    .iter()
                    .find(|&g| lower.is_subset(down[g]))
                    .ok_or_else(|| LatticeError::NotALattice { a: name(a), b: name(b), op: "meet" })?;
                let upper = up[a].intersection(up[b]);
                join[a * n + b] = upper
                    .iter()
                    .find(|&l| upper.is_subset(up[l]))
                    .ok_or_else(|| LatticeError::NotALattice { a: name(a), b: name(b), op: "join" })?;
            }
        }
        Ok(BoundedLattice { names, index, up, down, meet, join, bottom, top })
    }

    /// The chain `0 < c1 < ... < 1` with `n` elements.
    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        check_cap(n, MAX_ELEMENTS)?;
        let names: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "0".to_string(),
                _ if i == n - 1 => "1".to_string(),
                _ => format!("c{i}"),
            })
            .collect();
        let up = (0..n).map(|i| ElementSet::full(n).difference(ElementSet::full(i))).collect();
        Self::from_order(names, up)
    }

    /// The Boolean lattice with `2^k` elements, as the `k`-th power of the 2-chain.
    pub fn boolean(k: usize, cap: usize) -> Result<Self, LatticeError> {
        if k == 0 {
            return Self::chain(1);
        }
        Self::chain(2)?.direct_power(k, cap)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn element(&self, name: &str) -> Result<usize, LatticeError> {
        self.index_of(name).ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.len()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    /// `{x | a <= x}` as a raw set, without the name check of [`Self::up_set`].
    pub fn up(&self, a: usize) -> ElementSet {
        self.up[a]
    }

    pub fn down(&self, a: usize) -> ElementSet {
        self.down[a]
    }

    /// The principal filter `[a)`.
    pub fn up_set(&self, a: &str) -> Result<ElementSet, LatticeError> {
        self.element(a).map(|i| self.up[i])
    }

    pub fn down_set(&self, a: &str) -> Result<ElementSet, LatticeError> {
        self.element(a).map(|i| self.down[i])
    }

    /// Smallest up-closed superset of `set`.
    pub fn up_closure(&self, set: ElementSet) -> ElementSet {
        set.iter().fold(ElementSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    pub fn is_up_closed(&self, set: ElementSet) -> bool {
        set.iter().all(|x| self.up[x].is_subset(set))
    }

    pub fn is_meet_closed(&self, set: ElementSet) -> bool {
        set.iter().all(|x| set.iter().all(|y| set.contains(self.meet(x, y))))
    }

    /// Closes `set` under binary meets.
    pub fn meet_closure(&self, set: ElementSet) -> ElementSet {
        close_under(set, |x, y| self.meet(x, y))
    }

    pub fn meet_of(&self, set: ElementSet) -> usize {
        set.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_of(&self, set: ElementSet) -> usize {
        set.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `b` covers `a`: `a < b` with nothing strictly between.
    pub fn covers_pair(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b) && self.up[a].intersection(self.down[b]).len() == 2
    }

    /// The cover relation (transitive reduction of the order), in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.up[a].iter() {
                if self.covers_pair(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn atoms(&self) -> ElementSet {
        self.elements().filter(|&a| self.covers_pair(self.bottom, a)).collect()
    }

    pub fn coatoms(&self) -> ElementSet {
        self.elements().filter(|&a| self.covers_pair(a, self.top)).collect()
    }

    /// All `c` with `x ∧ c = 0` and `x ∨ c = 1`.
    pub fn complements(&self, x: usize) -> ElementSet {
        self.elements().filter(|&c| self.meet(x, c) == self.bottom && self.join(x, c) == self.top).collect()
    }

    /// First triple `(x, y, z)` with `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_counterexample().is_none()
    }

    /// The order dual: same names, reversed order, meet and join swapped.
    pub fn dual(&self) -> BoundedLattice {
        BoundedLattice {
            names: self.names.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// `L^n` with componentwise order. Tuples are indexed lexicographically,
    /// first coordinate most significant; for `n == 1` names are kept as is.
    pub fn direct_power(&self, n: usize, cap: usize) -> Result<BoundedLattice, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let m = self.len();
        let size = m
            .checked_pow(n as u32)
            .filter(|&s| s <= cap.min(MAX_ELEMENTS))
            .ok_or(LatticeError::SizeCapExceeded { size: m.saturating_pow(n as u32), cap: cap.min(MAX_ELEMENTS) })?;
        let coords: Vec<Vec<usize>> = (0..size).map(|i| tuple_of(i, m, n)).collect();
        let names = coords
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().map(|&c| self.name(c)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let up = coords
            .iter()
            .map(|t| (0..size).filter(|&j| t.iter().zip(&coords[j]).all(|(&a, &b)| self.leq(a, b))).collect())
            .collect();
        BoundedLattice::from_order(names, up)
    }

    /// Coordinates of a direct-power element (see [`Self::direct_power`]).
    pub fn power_coordinates(&self, index: usize, n: usize) -> Vec<usize> {
        tuple_of(index, self.len(), n)
    }

    /// The cover description of this lattice, without unary tables.
    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            elements: self.names.clone(),
            covers: self.covers().into_iter().map(|(a, b)| (self.names[a].clone(), self.names[b].clone())).collect(),
            delta: None,
            nabla: None,
        }
    }

    /// Renders a set as `{a,b,1}` in index order.
    pub fn render(&self, set: ElementSet) -> String {
        let parts: Vec<&str> = set.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn set_names(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|x| self.names[x].clone()).collect()
    }

    /// Parses a list of names into a set.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<ElementSet, LatticeError> {
        names.into_iter().map(|n| self.element(n)).collect()
    }
}

/// Closes `set` under a binary operation to a fixpoint.
pub(crate) fn close_under(set: ElementSet, op: impl Fn(usize, usize) -> usize) -> ElementSet {
    let mut cur = set;
    loop {
        let mut next = cur;
        for x in cur.iter() {
            for y in cur.iter() {
                next.insert(op(x, y));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn tuple_of(mut index: usize, m: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = index % m;
        index /= m;
    }
    t
}

fn check_cap(n: usize, cap: usize) -> Result<(), LatticeError> {
    let cap = cap.min(MAX_ELEMENTS);
    if n > cap {
        Err(LatticeError::SizeCapExceeded { size: n, cap })
    } else {
        Ok(())
    }
}

fn index_names(names: &[String]) -> Result<BTreeMap<String, usize>, LatticeError> {
    let mut index = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(LatticeError::DuplicateElement(n.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &BTreeMap<String, usize>, name: &str) -> Result<usize, LatticeError> {
    index.get(name).copied().ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
}

/// Every lattice with `n` elements up to isomorphism, for `1 <= n <= 7`.
///
/// Elements are named `0`, `a`, `b`, ..., `1` with bottom first and top last.
/// Output order is deterministic.
pub fn small_lattices(n: usize) -> Vec<BoundedLattice> {
    assert!((1..=7).contains(&n), "small_lattices supports 1..=7 elements");
    if n == 1 {
        return vec![BoundedLattice::chain(1).expect("one-element chain")];
    }
    let k = n - 2;
    let mut names = vec!["0".to_string()];
    names.extend((0..k).map(|i| ((b'a' + i as u8) as char).to_string()));
    names.push("1".to_string());

    let perms = permutations(k);
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut seen: Vec<u64> = Vec::new();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        // strict order among the middle elements: rel[i] = set of j with i < j
        let mut rel = vec![0u64; k];
        for (t, &(i, j)) in pairs.iter().enumerate() {
            if bits >> t & 1 == 1 {
                rel[i] |= 1 << j;
            }
        }
        let antisymmetric = pairs.iter().all(|&(i, j)| !(rel[i] >> j & 1 == 1 && rel[j] >> i & 1 == 1));
        let transitive = (0..k).all(|i| (0..k).filter(|&j| rel[i] >> j & 1 == 1).all(|j| rel[j] & !rel[i] == 0));
        if !antisymmetric || !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for &(i, j) in &pairs {
                    if rel[p[i]] >> p[j] & 1 == 1 {
                        code |= 1 << (i * k + j);
                    }
                }
                code
            })
            .min()
            .unwrap_or(0);
        if seen.contains(&canon) {
            continue;
        }
        let up: Vec<ElementSet> = (0..n)
            .map(|x| {
                if x == 0 {
                    ElementSet::full(n)
                } else if x == n - 1 {
                    ElementSet::singleton(n - 1)
                } else {
                    let i = x - 1;
                    let mut s = ElementSet::singleton(x).with(n - 1);
                    for j in 0..k {
                        if rel[i] >> j & 1 == 1 {
                            s.insert(j + 1);
                        }
                    }
                    s
                }
            })
            .collect();
        if let Ok(l) = BoundedLattice::from_order(names.clone(), up) {
            seen.push(canon);
            out.push(l);
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}
