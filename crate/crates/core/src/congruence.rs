//! Congruences of the reduct `(L; ∧, ∨, Δ)`: the determination relation `Φ`,
//! the congruences `θ_F` of S-filters, `Con(L)` and its structure.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::dicomplement::{DicomplementError, Wcl};
use crate::filters::FilterError;
use crate::lattice::BoundedLattice;
use crate::laws::{witness, LawReport};
use crate::set::ElementSet;
use crate::sfilters::{enumerate_s_filters, is_s_filter, s_filter_generated, trace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceError {
    Dicomplement(DicomplementError),
    Filter(FilterError),
    /// Blocks overlap, miss an element, or mention one outside the carrier.
    MalformedPartition(String),
    /// A triple `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    NotDistributive {
        witness: Vec<String>,
    },
    NotSFilter(String),
    /// The computed equivalence is not compatible with the operations.
    NotACongruence {
        relation: String,
        violation: Vec<String>,
    },
    SizeCapExceeded {
        size: usize,
        cap: usize,
    },
}

impl fmt::Display for CongruenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceError::Dicomplement(e) => write!(f, "{e}"),
            CongruenceError::Filter(e) => write!(f, "{e}"),
            CongruenceError::MalformedPartition(s) => write!(f, "malformed partition: {s}"),
            CongruenceError::NotDistributive { witness } => {
                write!(f, "lattice is not distributive at ({})", witness.join(", "))
            }
            CongruenceError::NotSFilter(s) => write!(f, "{s} is not an S-filter"),
            CongruenceError::NotACongruence { relation, violation } => {
                write!(f, "{relation} is not a congruence ({})", violation.join(", "))
            }
            CongruenceError::SizeCapExceeded { size, cap } => write!(f, "size {size} exceeds cap {cap}"),
        }
    }
}

impl core::error::Error for CongruenceError {}

impl From<DicomplementError> for CongruenceError {
    fn from(e: DicomplementError) -> Self {
        CongruenceError::Dicomplement(e)
    }
}

impl From<FilterError> for CongruenceError {
    fn from(e: FilterError) -> Self {
        CongruenceError::Filter(e)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        // Smaller root wins so labels stay stable.
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.0[hi] = lo;
        true
    }

    fn into_congruence(mut self) -> Congruence {
        let n = self.0.len();
        Congruence::from_labels((0..n).map(|x| self.find(x)).collect())
    }
}

/// An equivalence on the carrier, stored as block labels numbered by first
/// occurrence, so equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class: Vec<usize>,
}

impl Congruence {
    fn from_labels(labels: Vec<usize>) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let class = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(p) => p,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Congruence { class }
    }

    pub fn diagonal(n: usize) -> Self {
        Congruence { class: (0..n).collect() }
    }

    pub fn full(n: usize) -> Self {
        Congruence { class: alloc::vec![0; n] }
    }

    /// Validates that `blocks` partition the carrier of `l`. Compatibility
    /// is not checked here.
    pub fn from_blocks(l: &BoundedLattice, blocks: &[ElementSet]) -> Result<Self, CongruenceError> {
        let n = l.len();
        let mut labels = alloc::vec![usize::MAX; n];
        for (k, b) in blocks.iter().enumerate() {
            if b.is_empty() || !b.is_subset(l.carrier()) {
                return Err(CongruenceError::MalformedPartition(format!("block {} is empty or foreign", l.render(*b))));
            }
            for x in b.iter() {
                if labels[x] != usize::MAX {
                    return Err(CongruenceError::MalformedPartition(format!("`{}` lies in two blocks", l.name(x))));
                }
                labels[x] = k;
            }
        }
        if let Some(x) = labels.iter().position(|&c| c == usize::MAX) {
            return Err(CongruenceError::MalformedPartition(format!("`{}` is in no block", l.name(x))));
        }
        Ok(Congruence::from_labels(labels))
    }

    /// Carrier size.
    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class[x]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn block(&self, x: usize) -> ElementSet {
        let c = self.class[x];
        (0..self.len()).filter(|&y| self.class[y] == c).collect()
    }

    /// Blocks ordered by their least element.
    pub fn blocks(&self) -> Vec<ElementSet> {
        let mut out = alloc::vec![ElementSet::EMPTY; self.block_count()];
        for (x, &c) in self.class.iter().enumerate() {
            out[c].insert(x);
        }
        out
    }

    pub fn block_count(&self) -> usize {
        self.class.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.block_count() == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.block_count() <= 1
    }

    /// `[1]_θ`.
    pub fn cokernel(&self, l: &BoundedLattice) -> ElementSet {
        self.block(l.top())
    }

    /// Containment as relations.
    pub fn leq(&self, other: &Congruence) -> bool {
        (0..self.len()).all(|x| (0..x).all(|y| !self.related(x, y) || other.related(x, y)))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let n = self.len();
        Congruence::from_labels((0..n).map(|x| self.class[x] * n + other.class[x]).collect())
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.len());
        for x in 0..self.len() {
            for y in 0..x {
                if self.related(x, y) || other.related(x, y) {
                    uf.union(x, y);
                }
            }
        }
        uf.into_congruence()
    }

    pub fn relation(&self) -> Relation {
        Relation { rows: (0..self.len()).map(|x| self.block(x)).collect() }
    }

    /// `{0,v}|{u,a}|{b}|{1}`.
    pub fn render(&self, l: &BoundedLattice) -> String {
        let parts: Vec<String> = self.blocks().into_iter().map(|b| l.render(b)).collect();
        parts.join("|")
    }

    pub fn block_names(&self, l: &BoundedLattice) -> Vec<Vec<String>> {
        self.blocks().into_iter().map(|b| l.set_names(b)).collect()
    }
}

/// A binary relation on the carrier; row `x` holds every `y` with `x R y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<ElementSet>,
}

impl Relation {
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `x (R∘S) z` iff `x R y S z` for some `y`.
    pub fn compose(&self, other: &Relation) -> Relation {
        let rows =
            self.rows.iter().map(|r| r.iter().fold(ElementSet::EMPTY, |acc, y| acc.union(other.rows[y]))).collect();
        Relation { rows }
    }

    pub fn is_equivalence(&self) -> bool {
        let n = self.rows.len();
        (0..n).all(|x| self.contains(x, x))
            && (0..n).all(|x| self.rows[x].iter().all(|y| self.contains(y, x) && self.rows[y].is_subset(self.rows[x])))
    }

    /// The partition, when this is an equivalence.
    pub fn to_congruence(&self) -> Option<Congruence> {
        self.is_equivalence()
            .then(|| Congruence::from_labels(self.rows.iter().map(|r| r.first().unwrap_or(0)).collect()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Join,
    Meet,
    Delta,
}

impl Operation {
    pub fn as_str(self) -> &'static str {
        match self {
            Operation::Join => "join",
            Operation::Meet => "meet",
            Operation::Delta => "delta",
        }
    }
}

/// `(x, y) ∈ θ` but the images under `· op z` (or `Δ`) are not related.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub op: Operation,
    pub x: usize,
    pub y: usize,
    pub z: Option<usize>,
}

impl Violation {
    pub fn names(&self, l: &BoundedLattice) -> Vec<String> {
        let mut v = witness!(self.op.as_str(), l.name(self.x), l.name(self.y));
        if let Some(z) = self.z {
            v.push(l.name(z).to_string());
        }
        v
    }
}

/// First compatibility failure, scanning related pairs `x < y` in index order.
pub fn compatibility_violation(w: &Wcl<'_>, theta: &Congruence) -> Option<Violation> {
    let l = w.lattice();
    assert_eq!(theta.len(), l.len(), "congruence over a different carrier");
    for x in l.elements() {
        for y in x + 1..l.len() {
            if !theta.related(x, y) {
                continue;
            }
            for z in l.elements() {
                if !theta.related(l.join(x, z), l.join(y, z)) {
                    return Some(Violation { op: Operation::Join, x, y, z: Some(z) });
                }
                if !theta.related(l.meet(x, z), l.meet(y, z)) {
                    return Some(Violation { op: Operation::Meet, x, y, z: Some(z) });
                }
            }
            if !theta.related(w.delta(x), w.delta(y)) {
                return Some(Violation { op: Operation::Delta, x, y, z: None });
            }
        }
    }
    None
}

pub fn is_congruence(w: &Wcl<'_>, theta: &Congruence) -> bool {
    compatibility_violation(w, theta).is_none()
}

/// Builds the partition from named blocks and checks compatibility.
pub fn check_partition(w: &Wcl<'_>, blocks: &[ElementSet]) -> Result<Option<Violation>, CongruenceError> {
    let theta = Congruence::from_blocks(w.lattice(), blocks)?;
    Ok(compatibility_violation(w, &theta))
}

fn validated(w: &Wcl<'_>, theta: Congruence) -> Result<Congruence, CongruenceError> {
    match compatibility_violation(w, &theta) {
        None => Ok(theta),
        Some(v) => Err(CongruenceError::NotACongruence {
            relation: theta.render(w.lattice()),
            violation: v.names(w.lattice()),
        }),
    }
}

/// The partition by `Δ`-image. This is not a congruence on every WCL (for
/// instance the trivial weak complementation on the four-element Boolean
/// lattice), in which case the compatibility failure is returned.
pub fn determination_relation(w: &Wcl<'_>) -> Congruence {
    Congruence::from_labels(w.lattice().elements().map(|x| w.delta(x)).collect())
}

/// `Φ`, validated.
pub fn determination_congruence(w: &Wcl<'_>) -> Result<Congruence, CongruenceError> {
    validated(w, determination_relation(w))
}

fn require_distributive(l: &BoundedLattice) -> Result<(), CongruenceError> {
    match l.distributivity_counterexample() {
        None => Ok(()),
        Some((x, y, z)) => Err(CongruenceError::NotDistributive { witness: witness!(l.name(x), l.name(y), l.name(z)) }),
    }
}

fn theta_unchecked(w: &Wcl<'_>, f: ElementSet) -> Congruence {
    let l = w.lattice();
    let mut uf = UnionFind::new(l.len());
    for x in l.elements() {
        for y in 0..x {
            if f.iter().any(|u| l.join(x, w.delta(u)) == l.join(y, w.delta(u))) {
                uf.union(x, y);
            }
        }
    }
    uf.into_congruence()
}

/// `θ_F = {(x, y) | x ∨ u^Δ = y ∨ u^Δ for some u ∈ F}`. Refuses on
/// non-distributive lattices, where the relation need not be a congruence.
pub fn theta_from_filter(w: &Wcl<'_>, f: ElementSet) -> Result<Congruence, CongruenceError> {
    let l = w.lattice();
    require_distributive(l)?;
    if !is_s_filter(w, f) {
        return Err(CongruenceError::NotSFilter(l.render(f)));
    }
    validated(w, theta_unchecked(w, f))
}

/// The least congruence relating `a` and `b`.
pub fn principal_congruence(w: &Wcl<'_>, a: usize, b: usize) -> Congruence {
    let l = w.lattice();
    let mut uf = UnionFind::new(l.len());
    uf.union(a, b);
    loop {
        let mut changed = false;
        for x in l.elements() {
            for y in x + 1..l.len() {
                if uf.find(x) != uf.find(y) {
                    continue;
                }
                for z in l.elements() {
                    changed |= uf.union(l.join(x, z), l.join(y, z));
                    changed |= uf.union(l.meet(x, z), l.meet(y, z));
                }
                changed |= uf.union(w.delta(x), w.delta(y));
            }
        }
        if !changed {
            return uf.into_congruence();
        }
    }
}

/// `Con(L)`: the diagonal, every principal congruence, and all joins of
/// these. Ordered finest first, then by labels.
pub fn enumerate_congruences(w: &Wcl<'_>, cap: usize) -> Result<Vec<Congruence>, CongruenceError> {
    let l = w.lattice();
    if l.len() > cap {
        return Err(CongruenceError::SizeCapExceeded { size: l.len(), cap });
    }
    let mut out = alloc::vec![Congruence::diagonal(l.len())];
    for a in l.elements() {
        for b in a + 1..l.len() {
            let c = principal_congruence(w, a, b);
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    let mut i = 0;
    while i < out.len() {
        for j in 0..i {
            let c = out[i].join(&out[j]);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        i += 1;
    }
    out.sort_by(|p, q| q.block_count().cmp(&p.block_count()).then_with(|| p.cmp(q)));
    Ok(out)
}

/// Any two congruences sharing a block are equal. Returns a pair that
/// shares a block without being equal.
pub fn regularity_witness(con: &[Congruence]) -> Option<(usize, usize, ElementSet)> {
    for (i, p) in con.iter().enumerate() {
        for (j, q) in con.iter().enumerate().skip(i + 1) {
            if let Some(b) = p.blocks().into_iter().find(|b| q.blocks().contains(b)) {
                return Some((i, j, b));
            }
        }
    }
    None
}

/// Birkhoff: nontrivial, and the non-diagonal congruences meet above the diagonal.
pub fn is_subdirectly_irreducible(con: &[Congruence]) -> bool {
    let Some(first) = con.first() else { return false };
    let n = first.len();
    if n < 2 {
        return false;
    }
    let mut m = Congruence::full(n);
    for c in con.iter().filter(|c| !c.is_diagonal()) {
        m = m.meet(c);
    }
    !m.is_diagonal()
}

fn minimal_above<T>(items: &[T], is_bottom: impl Fn(&T) -> bool, leq: impl Fn(&T, &T) -> bool) -> usize {
    let rest: Vec<&T> = items.iter().filter(|x| !is_bottom(x)).collect();
    rest.iter().enumerate().filter(|&(i, x)| !rest.iter().enumerate().any(|(j, y)| i != j && leq(y, x))).count()
}

/// Number of atoms of `Con(L)`.
pub fn congruence_atoms(con: &[Congruence]) -> usize {
    minimal_above(con, |c| c.is_diagonal(), |a, b| a.leq(b) && a != b)
}

/// Number of atoms of `SF(L)` under inclusion.
pub fn s_filter_atoms(sf: &[ElementSet], top: usize) -> usize {
    minimal_above(sf, |f| *f == ElementSet::singleton(top), |a, b| a.is_proper_subset(*b))
}

/// Summary flags for a WCL.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub distributive: bool,
    pub phi_is_congruence: bool,
    pub phi_is_diagonal: bool,
    pub regular: bool,
    pub simple: bool,
    pub subdirectly_irreducible: bool,
    pub congruences: usize,
    pub s_filters: usize,
}

pub fn structure_flags(w: &Wcl<'_>, cap: usize) -> Result<StructureFlags, CongruenceError> {
    let l = w.lattice();
    let con = enumerate_congruences(w, cap)?;
    let sf = enumerate_s_filters(w, cap)?;
    let phi = determination_relation(w);
    Ok(StructureFlags {
        distributive: l.is_distributive(),
        phi_is_congruence: is_congruence(w, &phi),
        phi_is_diagonal: phi.is_diagonal(),
        regular: regularity_witness(&con).is_none(),
        simple: l.len() >= 2 && con.len() == 2,
        subdirectly_irreducible: is_subdirectly_irreducible(&con),
        congruences: con.len(),
        s_filters: sf.len(),
    })
}

/// Everything in the module, in one report.
pub fn congruence_laws(w: &Wcl<'_>, cap: usize) -> Result<LawReport, CongruenceError> {
    let mut r = lattice_of_congruences_laws(w, cap)?;
    r.extend(theta_laws(w, cap)?);
    r.extend(join_formula_check(w, cap)?);
    r.extend(permutability_check(w, cap)?);
    r.extend(structure_checks(w, cap)?);
    Ok(r)
}

/// Sanity of `Con(L)` itself.
pub fn lattice_of_congruences_laws(w: &Wcl<'_>, cap: usize) -> Result<LawReport, CongruenceError> {
    let l = w.lattice();
    let con = enumerate_congruences(w, cap)?;
    let show = |c: &Congruence| c.render(l);
    let mut r = LawReport::new();
    r.check("con.all-compatible", con.iter().find(|c| !is_congruence(w, c)).map(|c| witness!(show(c))));
    r.check(
        "con.principal-is-least",
        l.elements()
            .flat_map(|a| l.elements().map(move |b| (a, b)))
            .find(|&(a, b)| {
                let p = principal_congruence(w, a, b);
                !p.related(a, b) || con.iter().any(|c| c.related(a, b) && !p.leq(c))
            })
            .map(|(a, b)| witness!(l.name(a), l.name(b))),
    );
    let pairs = || con.iter().flat_map(|p| con.iter().map(move |q| (p, q)));
    r.check(
        "con.closed-under-meet-and-join",
        pairs()
            .find(|(p, q)| !con.contains(&p.meet(q)) || !con.contains(&p.join(q)))
            .map(|(p, q)| witness!(show(p), show(q))),
    );
    r.check(
        "con.distributive",
        pairs()
            .flat_map(|(p, q)| con.iter().map(move |s| (p, q, s)))
            .find(|(p, q, s)| p.meet(&q.join(s)) != p.meet(q).join(&p.meet(s)))
            .map(|(p, q, s)| witness!(show(p), show(q), show(s))),
    );
    r.check(
        "con.product-iff-permute",
        pairs()
            .find(|(p, q)| {
                let pq = p.relation().compose(&q.relation());
                let qp = q.relation().compose(&p.relation());
                pq.to_congruence().is_some_and(|c| is_congruence(w, &c)) != (pq == qp)
            })
            .map(|(p, q)| witness!(show(p), show(q))),
    );
    let full = Congruence::full(l.len());
    r.check(
        "con.zero-one-collapses-all",
        con.iter().find(|c| c.related(l.bottom(), l.top()) && **c != full).map(|c| witness!(show(c))),
    );
    r.check("con.cokernel-is-s-filter", con.iter().find(|c| !is_s_filter(w, c.cokernel(l))).map(|c| witness!(show(c))));
    r.check(
        "con.cokernel-generated-by-trace",
        con.iter()
            .find(|c| {
                let f = c.cokernel(l);
                s_filter_generated(w, trace(w, f)).ok() != Some(f)
            })
            .map(|c| witness!(show(c))),
    );
    // With a two-element dual skeleton every proper congruence has cokernel
    // {1}. The zero class can still be larger than {0}: only its trace on
    // the skeleton is forced.
    if w.skeleton().len() == 2 {
        let proper = || con.iter().filter(|c| **c != full);
        r.check(
            "con.two-element-skeleton-cokernel",
            proper().find(|c| c.cokernel(l).len() != 1).map(|c| witness!(show(c))),
        );
        r.check(
            "con.two-element-skeleton-zero-trace",
            proper().find(|c| c.block(l.bottom()).intersection(w.skeleton()).len() != 1).map(|c| witness!(show(c))),
        );
        r.finding_if(
            "con.two-element-skeleton-zero-class",
            proper().find(|c| c.block(l.bottom()).len() != 1).map(|c| witness!(show(c))),
            "a proper congruence may collapse 0 with elements outside the dual skeleton",
        );
    } else {
        for id in ["cokernel", "zero-trace", "zero-class"] {
            r.skip(format!("con.two-element-skeleton-{id}"), "dual skeleton has more than two elements");
        }
    }
    Ok(r)
}

const THETA_IDS: [&str; 6] = [
    "theta.is-congruence",
    "theta.cokernel",
    "theta.least",
    "theta.order-embedding",
    "theta.bounds",
    "theta.collapses-to-meet",
];

fn skip_all(r: &mut LawReport, ids: &[&str], reason: &str) {
    for id in ids {
        r.skip(*id, reason);
    }
}

const NOT_DISTRIBUTIVE: &str = "lattice is not distributive";

/// `θ_F` is a congruence with cokernel `F`, the least one collapsing `F`,
/// and `F ↦ θ_F` is an order embedding.
pub fn theta_laws(w: &Wcl<'_>, cap: usize) -> Result<LawReport, CongruenceError> {
    let l = w.lattice();
    let mut r = LawReport::new();
    if !l.is_distributive() {
        skip_all(&mut r, &THETA_IDS, NOT_DISTRIBUTIVE);
        return Ok(r);
    }
    let sf = enumerate_s_filters(w, cap)?;
    let con = enumerate_congruences(w, cap)?;
    let thetas: Vec<Congruence> = sf.iter().map(|&f| theta_unchecked(w, f)).collect();
    let show = |f: ElementSet| l.render(f);
    let each = || sf.iter().copied().zip(thetas.iter());
    r.check(
        "theta.is-congruence",
        each().find_map(|(f, t)| {
            compatibility_violation(w, t).map(|v| {
                let mut wit = witness!(show(f));
                wit.extend(v.names(l));
                wit
            })
        }),
    );
    r.check("theta.cokernel", each().find(|(f, t)| t.cokernel(l) != *f).map(|(f, _)| witness!(show(f))));
    r.check(
        "theta.least",
        each()
            .flat_map(|(f, t)| con.iter().map(move |c| (f, t, c)))
            .find(|(f, t, c)| f.is_subset(c.cokernel(l)) && !t.leq(c))
            .map(|(f, _, c)| witness!(show(f), c.render(l))),
    );
    r.check(
        "theta.order-embedding",
        each()
            .flat_map(|p| each().map(move |q| (p, q)))
            .find(|((f, tf), (g, tg))| f.is_subset(*g) != tf.leq(tg))
            .map(|((f, _), (g, _))| witness!(show(f), show(g))),
    );
    let one = ElementSet::singleton(l.top());
    r.check(
        "theta.bounds",
        (theta_unchecked(w, one) != Congruence::diagonal(l.len())
            || theta_unchecked(w, l.carrier()) != Congruence::full(l.len()))
        .then(|| witness!(show(one), show(l.carrier()))),
    );
    // Both the compatibility and the join-formula arguments meet with u^ΔΔ
    // assuming u^Δ ∧ u^ΔΔ = 0, which only holds for ⊓̄. The consequence
    // "x θ_F y implies x ∧ f = y ∧ f for some f ∈ F" can fail.
    r.finding_if(
        "theta.collapses-to-meet",
        each()
            .flat_map(|(f, t)| l.elements().flat_map(move |x| l.elements().map(move |y| (f, t, x, y))))
            .find(|&(f, t, x, y)| t.related(x, y) && !f.iter().any(|u| l.meet(x, u) == l.meet(y, u)))
            .map(|(f, _, x, y)| witness!(show(f), l.name(x), l.name(y))),
        "related elements need not agree on a meet with a member of F when u^D meet u^DD is nonzero",
    );
    Ok(r)
}

/// `θ_F ∨ Ψ = θ_F ∘ Ψ ∘ θ_F` for every S-filter `F` and `Ψ ∈ Con(L)`.
pub fn join_formula_check(w: &Wcl<'_>, cap: usize) -> Result<LawReport, CongruenceError> {
    let l = w.lattice();
    let mut r = LawReport::new();
    if !l.is_distributive() {
        r.skip("theta.join-formula", NOT_DISTRIBUTIVE);
        return Ok(r);
    }
    let sf = enumerate_s_filters(w, cap)?;
    let con = enumerate_congruences(w, cap)?;
    let mut bad = None;
    'outer: for &f in &sf {
        let t = theta_unchecked(w, f);
        let tr = t.relation();
        for psi in &con {
            let product = tr.compose(&psi.relation()).compose(&tr);
            if Some(t.join(psi)) != product.to_congruence() {
                bad = Some(witness!(l.render(f), psi.render(l)));
                break 'outer;
            }
        }
    }
    r.check("theta.join-formula", bad);
    Ok(r)
}

/// `θ_F ∘ θ_G = θ_G ∘ θ_F` for all S-filters.
pub fn permutability_check(w: &Wcl<'_>, cap: usize) -> Result<LawReport, CongruenceError> {
    let l = w.lattice();
    let mut r = LawReport::new();
    if !l.is_distributive() {
        r.skip("theta.permute", NOT_DISTRIBUTIVE);
        return Ok(r);
    }
    let sf = enumerate_s_filters(w, cap)?;
    let rels: Vec<Relation> = sf.iter().map(|&f| theta_unchecked(w, f).relation()).collect();
    let mut bad = None;
    'outer: for i in 0..sf.len() {
        for j in i + 1..sf.len() {
            if rels[i].compose(&rels[j]) != rels[j].compose(&rels[i]) {
                bad = Some(witness!(l.render(sf[i]), l.render(sf[j])));
                break 'outer;
            }
        }
    }
    r.check("theta.permute", bad);
    Ok(r)
}

const DIAGONAL_PHI_IDS: [&str; 6] = [
    "structure.singleton-cokernel-iff-diagonal",
    "structure.intersection-formula",
    "structure.con-iso-s-filters",
    "structure.sdi-iff-unique-s-filter-atom",
    "structure.simple-iff-two-s-filters",
    "structure.regular",
];

/// Facts about `Φ`, regularity, simplicity and subdirect irreducibility.
/// Statements whose proofs need `Φ = Δ` or distributivity are skipped
/// when those fail.
pub fn structure_checks(w: &Wcl<'_>, cap: usize) -> Result<LawReport, CongruenceError> {
    let l = w.lattice();
    let con = enumerate_congruences(w, cap)?;
    let sf = enumerate_s_filters(w, cap)?;
    let show = |c: &Congruence| c.render(l);
    let phi = determination_relation(w);
    let phi_violation = compatibility_violation(w, &phi);
    let mut r = LawReport::new();

    r.finding_if(
        "phi.is-congruence",
        phi_violation.map(|v| {
            let mut wit = witness!(show(&phi));
            wit.extend(v.names(l));
            wit
        }),
        "equal delta-images are not preserved by join on this instance",
    );
    let zero_trivial = |c: &Congruence| c.block(l.bottom()).len() == 1;
    r.check(
        "phi.above-zero-separating",
        con.iter().find(|c| zero_trivial(c) && !c.leq(&phi)).map(|c| witness!(show(c))),
    );
    r.finding_if(
        "phi.zero-class-trivial",
        (!zero_trivial(&phi)).then(|| witness!(l.render(phi.block(l.bottom())))),
        "0 shares its delta-image with every x satisfying x^D = 1",
    );
    let sk = w.skeleton();
    let diagonal_on_skeleton = |c: &Congruence| sk.iter().all(|x| c.block(x).intersection(sk).len() == 1);
    r.check("phi.diagonal-on-skeleton", (!diagonal_on_skeleton(&phi)).then(|| witness!(show(&phi))));
    r.check(
        "phi.above-skeleton-separating",
        con.iter().find(|c| diagonal_on_skeleton(c) && !c.leq(&phi)).map(|c| witness!(show(c))),
    );

    let regular = regularity_witness(&con);
    let regular_wit = || regular.as_ref().map(|&(i, j, b)| witness!(show(&con[i]), show(&con[j]), l.render(b)));
    // The forward half of the proof uses Φ ∈ Con(L).
    match (regular.is_none() == phi.is_diagonal(), phi_violation.is_some()) {
        (true, _) => r.pass("structure.regular-iff-phi-diagonal"),
        (false, true) => r.finding_if(
            "structure.regular-iff-phi-diagonal",
            Some(regular_wit().unwrap_or_else(|| witness!(show(&phi)))),
            "regularity and a diagonal determination relation disagree where the latter is not a congruence",
        ),
        (false, false) => {
            r.fail("structure.regular-iff-phi-diagonal", regular_wit().unwrap_or_else(|| witness!(show(&phi))))
        }
    }

    let birkhoff = is_subdirectly_irreducible(&con);
    r.check(
        "structure.birkhoff-unique-atom",
        (birkhoff != (l.len() >= 2 && congruence_atoms(&con) == 1)).then(|| witness!(birkhoff, congruence_atoms(&con))),
    );

    if !phi.is_diagonal() {
        skip_all(&mut r, &DIAGONAL_PHI_IDS, "determination relation is not the diagonal");
        return Ok(r);
    }
    let one = ElementSet::singleton(l.top());
    r.check(
        "structure.singleton-cokernel-iff-diagonal",
        con.iter().find(|c| (c.cokernel(l) == one) != c.is_diagonal()).map(|c| witness!(show(c))),
    );
    r.check("structure.regular", regular_wit());
    if !l.is_distributive() {
        for id in &DIAGONAL_PHI_IDS[1..5] {
            r.skip(*id, NOT_DISTRIBUTIVE);
        }
        return Ok(r);
    }
    let thetas: Vec<Congruence> = sf.iter().map(|&f| theta_unchecked(w, f)).collect();
    let n = l.len();
    let meet_all = |cs: &mut dyn Iterator<Item = &Congruence>| cs.fold(Congruence::full(n), |m, c| m.meet(c));
    let lhs = meet_all(&mut con.iter().filter(|c| !c.is_diagonal()));
    let rhs = meet_all(&mut sf.iter().zip(&thetas).filter(|(f, _)| **f != one).map(|(_, t)| t));
    r.check("structure.intersection-formula", (lhs != rhs).then(|| witness!(show(&lhs), show(&rhs))));

    let mut sorted = thetas.clone();
    sorted.sort();
    sorted.dedup();
    let mut con_sorted = con.clone();
    con_sorted.sort();
    r.check(
        "structure.con-iso-s-filters",
        (sorted.len() != sf.len() || sorted != con_sorted).then(|| witness!(sf.len(), con.len())),
    );
    let sf_atoms = s_filter_atoms(&sf, l.top());
    r.check(
        "structure.sdi-iff-unique-s-filter-atom",
        (birkhoff != (sf_atoms == 1)).then(|| witness!(birkhoff, sf_atoms)),
    );
    let simple = n >= 2 && con.len() == 2;
    r.check("structure.simple-iff-two-s-filters", (simple != (sf.len() == 2)).then(|| witness!(con.len(), sf.len())));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicomplement::{enumerate, ComplementSide, Dicomplementation};
    use crate::instances;
    use crate::lattice::small_lattices;
    use crate::laws::Status;

    fn blocks(l: &BoundedLattice, bs: &[&[&str]]) -> Vec<ElementSet> {
        bs.iter().map(|b| l.set_of(b.iter().copied()).unwrap()).collect()
    }

    #[test]
    fn l6_example_partitions() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        assert_eq!(check_partition(&w, &blocks(l, &[&["0", "u"], &["a", "v"], &["b", "1"]])).unwrap(), None);
        assert_eq!(check_partition(&w, &blocks(l, &[&["0", "b", "v"], &["u", "a", "1"]])).unwrap(), None);
        let bad = check_partition(&w, &blocks(l, &[&["0", "a"], &["u"], &["v"], &["b"], &["1"]])).unwrap().unwrap();
        // 0 ∧ u = 0 but a ∧ u = u.
        assert_eq!(bad.names(l), ["join", "0", "a", "u"]);
        assert!(matches!(
            check_partition(&w, &blocks(l, &[&["0", "u"], &["u", "a", "v", "b", "1"]])),
            Err(CongruenceError::MalformedPartition(_))
        ));
        assert!(matches!(check_partition(&w, &blocks(l, &[&["0", "u"]])), Err(CongruenceError::MalformedPartition(_))));
    }

    #[test]
    fn l6_phi_and_theta() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let phi = determination_congruence(&w).unwrap();
        assert_eq!(phi.render(l), "{0,v}|{u,a}|{b}|{1}");
        assert_eq!(theta_from_filter(&w, s(&["b", "1"])).unwrap().render(l), "{0,u}|{v,a}|{b,1}");
        assert_eq!(theta_from_filter(&w, s(&["u", "a", "1"])).unwrap().render(l), "{0,v,b}|{u,a,1}");
        assert!(theta_from_filter(&w, s(&["1"])).unwrap().is_diagonal());
        assert!(theta_from_filter(&w, l.carrier()).unwrap().is_full());
        assert!(matches!(theta_from_filter(&w, s(&["a", "1"])), Err(CongruenceError::NotSFilter(_))));
        let w7 = instances::l7();
        let w7 = w7.wcl().unwrap();
        assert!(matches!(
            theta_from_filter(&w7, ElementSet::singleton(6)),
            Err(CongruenceError::NotDistributive { .. })
        ));
    }

    #[test]
    fn l6_con() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let e = |x| l.index_of(x).unwrap();
        let con = enumerate_congruences(&w, 12).unwrap();
        assert!(principal_congruence(&w, e("a"), e("a")).is_diagonal());
        assert!(principal_congruence(&w, e("0"), e("1")).is_full());
        let known = [
            Congruence::diagonal(6),
            Congruence::full(6),
            determination_congruence(&w).unwrap(),
            theta_from_filter(&w, s(&["b", "1"])).unwrap(),
            theta_from_filter(&w, s(&["u", "a", "1"])).unwrap(),
        ];
        for k in &known {
            assert!(con.contains(k), "{}", k.render(l));
        }
        assert_eq!(con, brute_force_con(&w));
        assert!(matches!(enumerate_congruences(&w, 5), Err(CongruenceError::SizeCapExceeded { .. })));

        let r = congruence_laws(&w, 12).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.status("phi.is-congruence"), Some(Status::Pass));
        assert_eq!(r.status("phi.zero-class-trivial"), Some(Status::Finding));
        assert_eq!(r.status("theta.join-formula"), Some(Status::Pass));
        assert_eq!(r.status("structure.regular-iff-phi-diagonal"), Some(Status::Pass));
        let flags = structure_flags(&w, 12).unwrap();
        assert!(!flags.regular && !flags.phi_is_diagonal && flags.distributive);
    }

    #[test]
    fn phi_fails_on_trivial_b4() {
        let d = Dicomplementation::trivial(BoundedLattice::boolean(2, 64).unwrap());
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let top = ElementSet::singleton(l.top());
        assert_eq!(determination_relation(&w).blocks(), [l.carrier().difference(top), top]);
        assert!(matches!(determination_congruence(&w), Err(CongruenceError::NotACongruence { .. })));
        let r = structure_checks(&w, 12).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.status("phi.is-congruence"), Some(Status::Finding));
        // Only the diagonal and the full relation survive, so the algebra is regular.
        assert_eq!(enumerate_congruences(&w, 12).unwrap().len(), 2);
        assert_eq!(r.status("structure.regular-iff-phi-diagonal"), Some(Status::Finding));
    }

    #[test]
    fn booleans() {
        for k in 1..=3 {
            let d = instances::boolean(k);
            let w = d.wcl().unwrap();
            let phi = determination_congruence(&w).unwrap();
            assert!(phi.is_diagonal());
            let r = congruence_laws(&w, 12).unwrap();
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
            assert!(r.results.iter().all(|x| x.status != Status::Skipped || x.id.starts_with("con.two-element")));
            let f = structure_flags(&w, 12).unwrap();
            assert_eq!(f.congruences, f.s_filters);
            assert_eq!(f.simple, k == 1);
            assert_eq!(f.subdirectly_irreducible, k == 1);
        }
        let c2 = instances::chain_trivial(2);
        let f = structure_flags(&c2.wcl().unwrap(), 12).unwrap();
        assert!(f.simple && f.s_filters == 2);
    }

    /// Every partition of the carrier, filtered by a direct compatibility test.
    fn brute_force_con(w: &Wcl<'_>) -> Vec<Congruence> {
        let l = w.lattice();
        let n = l.len();
        let mut out = Vec::new();
        let mut labels = alloc::vec![0usize; n];
        fn rec(k: usize, max: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
            if k == labels.len() {
                visit(labels);
                return;
            }
            for c in 0..=max + 1 {
                labels[k] = c;
                rec(k + 1, max.max(c), labels, visit);
            }
        }
        let mut visit = |ls: &[usize]| {
            let ok = (0..n).all(|x| {
                (0..n).all(|y| {
                    ls[x] != ls[y]
                        || ls[w.delta(x)] == ls[w.delta(y)]
                            && (0..n)
                                .all(|z| ls[l.join(x, z)] == ls[l.join(y, z)] && ls[l.meet(x, z)] == ls[l.meet(y, z)])
                })
            });
            if ok {
                out.push(Congruence { class: ls.to_vec() });
            }
        };
        if n > 0 {
            rec(1, 0, &mut labels, &mut visit);
        }
        out.sort_by(|p, q| q.block_count().cmp(&p.block_count()).then_with(|| p.cmp(q)));
        out
    }

    #[test]
    fn enumeration_matches_partition_scan() {
        for n in 1..=5 {
            for lat in small_lattices(n) {
                for d in enumerate(&lat, ComplementSide::Delta, 8).unwrap() {
                    let w = d.wcl().unwrap();
                    assert_eq!(enumerate_congruences(&w, 12).unwrap(), brute_force_con(&w));
                    let r = congruence_laws(&w, 12).unwrap();
                    assert!(r.all_pass(), "{}: {:?}", lat.names().join(","), r.failures().collect::<Vec<_>>());
                }
            }
        }
        let d = instances::l7();
        let w = d.wcl().unwrap();
        assert_eq!(enumerate_congruences(&w, 12).unwrap(), brute_force_con(&w));
        let r = congruence_laws(&w, 12).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.status("theta.join-formula"), Some(Status::Skipped));
    }

    #[test]
    fn meet_collapse_claim_fails_below_a_square() {
        // 0 < a < b, c < 1 with b, c swapped by Δ: b^Δ ∧ b^ΔΔ = a.
        let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        let up: Vec<ElementSet> = [&[0, 1, 2, 3, 4][..], &[1, 2, 3, 4], &[2, 4], &[3, 4], &[4]]
            .iter()
            .map(|r| r.iter().copied().collect())
            .collect();
        let l = BoundedLattice::from_order(names, up).unwrap();
        let table = [("0", "1"), ("a", "1"), ("b", "c"), ("c", "b"), ("1", "0")];
        let d = Dicomplementation::from_named(l, Some(&table[..]), None).unwrap();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let f = l.set_of(["b", "1"]).unwrap();
        assert_eq!(theta_from_filter(&w, f).unwrap().render(l), "{0,a,c}|{b,1}");
        let r = theta_laws(&w, 12).unwrap();
        let res = r.get("theta.collapses-to-meet").unwrap();
        assert_eq!(res.status, Status::Finding);
        assert_eq!(res.witness.as_deref(), Some(&["{b,1}".to_string(), "0".into(), "a".into()][..]));
        assert!(r.all_pass());
        assert!(join_formula_check(&w, 12).unwrap().all_pass());
    }

    #[test]
    fn relation_algebra() {
        let p = Congruence::from_labels(alloc::vec![0, 0, 1, 1]);
        let q = Congruence::from_labels(alloc::vec![0, 1, 1, 2]);
        assert_eq!(p.join(&q), Congruence::full(4));
        assert_eq!(p.meet(&q), Congruence::diagonal(4));
        let pq = p.relation().compose(&q.relation());
        assert!(pq.contains(0, 2) && !pq.contains(0, 3));
        assert!(pq.to_congruence().is_none());
        assert_eq!(p.relation().to_congruence(), Some(p.clone()));
    }
}
