//! Exhaustive evaluation of the standard identities of (dual) weak complementations.
//!
//! Ids are grouped by prefix: `delta.*` needs Δ, `nabla.*` needs ∇, and
//! `derived.*` covers the derived operations. A law whose table is absent is
//! reported as skipped.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::dicomplement::{Dicomplementation, DualWcl, Wcl};
use crate::lattice::BoundedLattice;
use crate::laws::LawReport;

struct Scan<'a> {
    l: &'a BoundedLattice,
}

impl Scan<'_> {
    fn names(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.l.name(x).to_string()).collect()
    }

    fn all1(&self, f: impl Fn(usize) -> bool) -> Option<Vec<String>> {
        self.l.elements().find(|&x| !f(x)).map(|x| self.names(&[x]))
    }

    fn all2(&self, f: impl Fn(usize, usize) -> bool) -> Option<Vec<String>> {
        let n = self.l.len();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| !f(x, y)).map(|(x, y)| self.names(&[x, y]))
    }

    fn all3(&self, f: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<String>> {
        let n = self.l.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !f(x, y, z) {
                        return Some(self.names(&[x, y, z]));
                    }
                }
            }
        }
        None
    }

    /// `x <= y` and `a <= b` imply `f(x, a) <= f(y, b)`.
    fn monotone2(&self, f: impl Fn(usize, usize) -> usize) -> Option<Vec<String>> {
        let l = self.l;
        let n = l.len();
        let le: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| l.leq(x, y)).collect();
        for &(x, y) in &le {
            for &(a, b) in &le {
                if !l.leq(f(x, a), f(y, b)) {
                    return Some(self.names(&[x, y, a, b]));
                }
            }
        }
        None
    }
}

const NO_DELTA: &str = "needs the delta table";
const NO_NABLA: &str = "needs the nabla table";
const NO_BOTH: &str = "needs both tables";

pub const DELTA_LAWS: [&str; 10] = [
    "delta.meet-to-join",
    "delta.sqcap-bar-is-interior-of-meet",
    "delta.galois",
    "delta.below-implies-join-top",
    "delta.disjoint-implies-below",
    "delta.join-complement-top",
    "delta.triple",
    "delta.interior-coextensive",
    "delta.interior-isotone",
    "delta.interior-idempotent",
];

pub const NABLA_LAWS: [&str; 10] = [
    "nabla.join-to-meet",
    "nabla.sqcup-is-closure-of-join",
    "nabla.galois",
    "nabla.above-implies-meet-bottom",
    "nabla.join-top-implies-below",
    "nabla.meet-complement-bottom",
    "nabla.triple",
    "nabla.closure-extensive",
    "nabla.closure-isotone",
    "nabla.closure-idempotent",
];

pub const DERIVED_DELTA_LAWS: [&str; 8] = [
    "derived.sqcap-bar-below-meet",
    "derived.under-sqcup-below-join",
    "derived.sqcap-bar-translation",
    "derived.join-absorbs-sqcap-bar",
    "derived.sqcap-bar-with-join-is-interior",
    "derived.sqcap-bar-interior-invariant",
    "derived.sqcap-bar-monotone",
    "derived.sqcap-bar-idempotent-up-to-interior",
];

pub const DERIVED_NABLA_LAWS: [&str; 7] = [
    "derived.join-below-sqcup",
    "derived.sqcup-translation",
    "derived.meet-absorbs-sqcup",
    "derived.sqcup-with-meet-is-closure",
    "derived.sqcup-closure-invariant",
    "derived.sqcup-monotone",
    "derived.sqcup-idempotent-up-to-closure",
];

/// Evaluates every identity over all tuples of elements.
pub fn check_identities(d: &Dicomplementation) -> LawReport {
    let mut r = LawReport::new();
    let s = Scan { l: d.lattice() };
    match d.wcl() {
        Ok(w) => {
            delta_laws(&s, &w, &mut r);
            derived_delta_laws(&s, &w, &mut r);
        }
        Err(_) => {
            for id in DELTA_LAWS.iter().chain(&DERIVED_DELTA_LAWS) {
                r.skip(*id, NO_DELTA);
            }
        }
    }
    match d.dual_wcl() {
        Ok(v) => {
            nabla_laws(&s, &v, &mut r);
            derived_nabla_laws(&s, &v, &mut r);
        }
        Err(_) => {
            for id in NABLA_LAWS.iter().chain(&DERIVED_NABLA_LAWS) {
                r.skip(*id, NO_NABLA);
            }
        }
    }
    match (d.delta_table(), d.nabla_table()) {
        (Ok(dt), Ok(nt)) => r.check("nabla.below-delta", s.all1(|x| s.l.leq(nt[x], dt[x]))),
        _ => r.skip("nabla.below-delta", NO_BOTH),
    }
    r
}

fn delta_laws(s: &Scan<'_>, w: &Wcl<'_>, r: &mut LawReport) {
    let l = s.l;
    let d = |x| w.delta(x);
    let (zero, one) = (l.bottom(), l.top());
    r.check(DELTA_LAWS[0], s.all2(|x, y| d(l.meet(x, y)) == l.join(d(x), d(y))));
    r.check(DELTA_LAWS[1], s.all2(|x, y| w.sqcap_bar(x, y) == w.interior(l.meet(x, y))));
    r.check(DELTA_LAWS[2], s.all2(|x, y| l.leq(d(x), y) == l.leq(d(y), x)));
    r.check(DELTA_LAWS[3], s.all2(|x, y| !l.leq(d(x), y) || l.join(y, x) == one));
    r.check(DELTA_LAWS[4], s.all2(|x, y| l.meet(y, x) != zero || l.leq(x, d(y))));
    r.check(DELTA_LAWS[5], s.all1(|x| l.join(x, d(x)) == one));
    r.check(DELTA_LAWS[6], s.all1(|x| d(d(d(x))) == d(x)));
    r.check(DELTA_LAWS[7], s.all1(|x| l.leq(w.interior(x), x)));
    r.check(DELTA_LAWS[8], s.all2(|x, y| !l.leq(x, y) || l.leq(w.interior(x), w.interior(y))));
    r.check(DELTA_LAWS[9], s.all1(|x| w.interior(w.interior(x)) == w.interior(x)));
}

fn nabla_laws(s: &Scan<'_>, v: &DualWcl<'_>, r: &mut LawReport) {
    let l = s.l;
    let m = |x| v.nabla(x);
    let (zero, one) = (l.bottom(), l.top());
    r.check(NABLA_LAWS[0], s.all2(|x, y| m(l.join(x, y)) == l.meet(m(x), m(y))));
    r.check(NABLA_LAWS[1], s.all2(|x, y| v.sqcup(x, y) == v.closure(l.join(x, y))));
    r.check(NABLA_LAWS[2], s.all2(|x, y| l.leq(y, m(x)) == l.leq(x, m(y))));
    r.check(NABLA_LAWS[3], s.all2(|x, y| !l.leq(y, m(x)) || l.meet(y, x) == zero));
    r.check(NABLA_LAWS[4], s.all2(|x, y| l.join(y, x) != one || l.leq(m(y), x)));
    r.check(NABLA_LAWS[5], s.all1(|x| l.meet(x, m(x)) == zero));
    r.check(NABLA_LAWS[6], s.all1(|x| m(m(m(x))) == m(x)));
    r.check(NABLA_LAWS[7], s.all1(|x| l.leq(x, v.closure(x))));
    r.check(NABLA_LAWS[8], s.all2(|x, y| !l.leq(x, y) || l.leq(v.closure(x), v.closure(y))));
    r.check(NABLA_LAWS[9], s.all1(|x| v.closure(v.closure(x)) == v.closure(x)));
}

fn derived_delta_laws(s: &Scan<'_>, w: &Wcl<'_>, r: &mut LawReport) {
    let l = s.l;
    let sq = |x, y| w.sqcap_bar(x, y);
    r.check(DERIVED_DELTA_LAWS[0], s.all2(|x, y| l.leq(sq(x, y), l.meet(x, y))));
    r.check(DERIVED_DELTA_LAWS[1], s.all2(|x, y| l.leq(w.under_sqcup(x, y), l.join(x, y))));
    // x ↦ x ⊓̄ a preserves ≤ and ⊓̄.
    r.check(
        DERIVED_DELTA_LAWS[2],
        s.all3(|x, y, a| (!l.leq(x, y) || l.leq(sq(x, a), sq(y, a))) && sq(sq(x, y), a) == sq(sq(x, a), sq(y, a))),
    );
    r.check(DERIVED_DELTA_LAWS[3], s.all2(|x, y| l.join(x, sq(x, y)) == x));
    r.check(DERIVED_DELTA_LAWS[4], s.all2(|x, y| sq(x, l.join(x, y)) == w.interior(x)));
    r.check(
        DERIVED_DELTA_LAWS[5],
        s.all2(|x, y| {
            let v = sq(x, y);
            sq(w.interior(x), w.interior(y)) == v && sq(w.interior(x), y) == v
        }),
    );
    r.check(DERIVED_DELTA_LAWS[6], s.monotone2(sq));
    r.check(DERIVED_DELTA_LAWS[7], s.all1(|x| sq(x, x) == w.interior(x)));
}

fn derived_nabla_laws(s: &Scan<'_>, v: &DualWcl<'_>, r: &mut LawReport) {
    let l = s.l;
    let sq = |x, y| v.sqcup(x, y);
    r.check(DERIVED_NABLA_LAWS[0], s.all2(|x, y| l.leq(l.join(x, y), sq(x, y))));
    // a ↦ x ⊔ a preserves ≤ and ⊔.
    r.check(
        DERIVED_NABLA_LAWS[1],
        s.all3(|x, a, b| (!l.leq(a, b) || l.leq(sq(x, a), sq(x, b))) && sq(x, sq(a, b)) == sq(sq(x, a), sq(x, b))),
    );
    r.check(DERIVED_NABLA_LAWS[2], s.all2(|x, y| l.meet(x, sq(x, y)) == x));
    r.check(DERIVED_NABLA_LAWS[3], s.all2(|x, y| sq(x, l.meet(x, y)) == v.closure(x)));
    r.check(
        DERIVED_NABLA_LAWS[4],
        s.all2(|x, y| {
            let j = sq(x, y);
            sq(v.closure(x), v.closure(y)) == j && sq(v.closure(x), y) == j
        }),
    );
    r.check(DERIVED_NABLA_LAWS[5], s.monotone2(sq));
    r.check(DERIVED_NABLA_LAWS[6], s.all1(|x| sq(x, x) == v.closure(x)));
}
