//! Ortholattice law checks over an abstract finite carrier `0..size`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::laws::LawReport;

/// Operations of a candidate ortholattice. Elements are positions `0..size`.
pub(crate) struct OrthoOps<'a> {
    pub size: usize,
    pub leq: &'a dyn Fn(usize, usize) -> bool,
    pub meet: &'a dyn Fn(usize, usize) -> usize,
    pub join: &'a dyn Fn(usize, usize) -> usize,
    pub complement: &'a dyn Fn(usize) -> usize,
    pub bottom: usize,
    pub top: usize,
    pub render: &'a dyn Fn(usize) -> String,
}

impl OrthoOps<'_> {
    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |a| (0..self.size).map(move |b| (a, b)))
    }

    fn show(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| (self.render)(x)).collect()
    }
}

/// Ids: `lattice-meet`, `lattice-join`, `bounds`, `antitone`, `involutive`,
/// `join-complement-top`, `meet-complement-bottom`.
pub(crate) fn ortholattice_laws(o: &OrthoOps<'_>) -> LawReport {
    let mut r = LawReport::new();
    let n = o.size;
    let is_glb = |a: usize, b: usize| {
        let m = (o.meet)(a, b);
        m < n && (o.leq)(m, a) && (o.leq)(m, b) && (0..n).all(|c| !((o.leq)(c, a) && (o.leq)(c, b)) || (o.leq)(c, m))
    };
    let is_lub = |a: usize, b: usize| {
        let j = (o.join)(a, b);
        j < n && (o.leq)(a, j) && (o.leq)(b, j) && (0..n).all(|c| !((o.leq)(a, c) && (o.leq)(b, c)) || (o.leq)(j, c))
    };
    r.check("lattice-meet", o.pairs().find(|&(a, b)| !is_glb(a, b)).map(|(a, b)| o.show(&[a, b])));
    r.check("lattice-join", o.pairs().find(|&(a, b)| !is_lub(a, b)).map(|(a, b)| o.show(&[a, b])));
    r.check("bounds", (0..n).find(|&a| !((o.leq)(o.bottom, a) && (o.leq)(a, o.top))).map(|a| o.show(&[a])));
    r.check(
        "antitone",
        o.pairs()
            .find(|&(a, b)| (o.leq)(a, b) && !(o.leq)((o.complement)(b), (o.complement)(a)))
            .map(|(a, b)| o.show(&[a, b])),
    );
    r.check("involutive", (0..n).find(|&a| (o.complement)((o.complement)(a)) != a).map(|a| o.show(&[a])));
    r.check("join-complement-top", (0..n).find(|&a| (o.join)(a, (o.complement)(a)) != o.top).map(|a| o.show(&[a])));
    r.check(
        "meet-complement-bottom",
        (0..n).find(|&a| (o.meet)(a, (o.complement)(a)) != o.bottom).map(|a| o.show(&[a])),
    );
    r
}
