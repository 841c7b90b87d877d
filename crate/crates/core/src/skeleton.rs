//! The ortholattices carried by the skeleton and the dual skeleton.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::dicomplement::{DicomplementError, Dicomplementation, Side};
use crate::lattice::BoundedLattice;
use crate::laws::LawReport;
use crate::ortho::{ortholattice_laws, OrthoOps};
use crate::set::ElementSet;

/// A skeleton with its own meet, join and orthocomplement. Elements are
/// lattice indices; the order is the one induced from the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonAlgebra {
    side: Side,
    carrier: ElementSet,
    members: Vec<usize>,
    /// Position of each lattice element within `members`, or `usize::MAX`.
    slot: Vec<usize>,
    meet: Vec<usize>,
    join: Vec<usize>,
    complement: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl SkeletonAlgebra {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn carrier(&self) -> ElementSet {
        self.carrier
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.carrier.contains(x)
    }

    fn pos(&self, x: usize) -> usize {
        let p = self.slot[x];
        assert!(p != usize::MAX, "element outside the skeleton");
        p
    }

    /// Panics if either argument lies outside the carrier.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[self.pos(x) * self.len() + self.pos(y)]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[self.pos(x) * self.len() + self.pos(y)]
    }

    pub fn complement(&self, x: usize) -> usize {
        self.complement[self.pos(x)]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Ortholattice laws evaluated with this algebra's own operations.
    pub fn laws(&self, lattice: &BoundedLattice) -> LawReport {
        let m = &self.members;
        let render = |k: usize| -> String { lattice.name(m[k]).to_string() };
        let ops = OrthoOps {
            size: m.len(),
            leq: &|a, b| lattice.leq(m[a], m[b]),
            meet: &|a, b| self.slot[self.meet(m[a], m[b])],
            join: &|a, b| self.slot[self.join(m[a], m[b])],
            complement: &|a| self.slot[self.complement(m[a])],
            bottom: self.slot[self.bottom],
            top: self.slot[self.top],
            render: &render,
        };
        ortholattice_laws(&ops)
    }

    /// The carrier as a standalone bounded lattice under the induced order,
    /// keeping element names. Index `k` of the result is `members()[k]`.
    pub fn as_lattice(&self, lattice: &BoundedLattice) -> BoundedLattice {
        let names = self.members.iter().map(|&x| lattice.name(x).to_string()).collect();
        let up = self
            .members
            .iter()
            .map(|&x| (0..self.len()).filter(|&k| lattice.leq(x, self.members[k])).collect())
            .collect();
        BoundedLattice::from_order(names, up).expect("a skeleton is a lattice under the induced order")
    }
}

impl Dicomplementation {
    /// `(S(L); ∧, ⊔, ∇)` or `(S̄(L); ⊓̄, ∨, Δ)`, validated as an ortholattice.
    pub fn skeleton_algebra(&self, side: Side) -> Result<SkeletonAlgebra, DicomplementError> {
        let l = self.lattice();
        let (carrier, meet, join, comp): (ElementSet, Vec<usize>, Vec<usize>, Vec<usize>) = match side {
            Side::Closed => {
                let v = self.dual_wcl()?;
                let c = v.skeleton();
                let ms: Vec<usize> = c.iter().collect();
                let meet = ms.iter().flat_map(|&x| ms.iter().map(move |&y| l.meet(x, y))).collect();
                let join = ms.iter().flat_map(|&x| ms.iter().map(move |&y| v.sqcup(x, y))).collect();
                (c, meet, join, ms.iter().map(|&x| v.nabla(x)).collect())
            }
            Side::Interior => {
                let v = self.wcl()?;
                let c = v.skeleton();
                let ms: Vec<usize> = c.iter().collect();
                let meet = ms.iter().flat_map(|&x| ms.iter().map(move |&y| v.sqcap_bar(x, y))).collect();
                let join = ms.iter().flat_map(|&x| ms.iter().map(move |&y| l.join(x, y))).collect();
                (c, meet, join, ms.iter().map(|&x| v.delta(x)).collect())
            }
        };
        let members: Vec<usize> = carrier.iter().collect();
        let mut slot = alloc::vec![usize::MAX; l.len()];
        for (k, &x) in members.iter().enumerate() {
            slot[x] = k;
        }
        // Operations that leave the carrier are reported as ortholaw failures.
        let leaves = meet.iter().chain(&join).chain(&comp).any(|&x| !carrier.contains(x));
        let alg = SkeletonAlgebra {
            side,
            carrier,
            members,
            slot,
            meet,
            join,
            complement: comp,
            bottom: l.bottom(),
            top: l.top(),
        };
        if leaves {
            return Err(DicomplementError::OrtholawViolation { law: "closed-operations".into(), witness: Vec::new() });
        }
        if let Some(f) = alg.laws(l).failures().next() {
            return Err(DicomplementError::OrtholawViolation {
                law: f.id.clone(),
                witness: f.witness.clone().unwrap_or_default(),
            });
        }
        Ok(alg)
    }
}
