//! S-filters: filters closed under `⊓̄`, their three characterisations, the
//! correspondence `φ: G ↦ F_G` with filters of `S̄(L)`, and the S-join `⊻`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::dicomplement::Wcl;
use crate::filters::{enumerate_filters, filter_join, is_filter, sqcap_bar_closure, star, star_bar, FilterError};
use crate::lattice::BoundedLattice;
use crate::laws::{witness, LawReport};
use crate::ortho::{ortholattice_laws, OrthoOps};
use crate::set::ElementSet;

/// The three equivalent S-filter conditions, evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SConditions {
    /// Closure under `⊓̄`, including `x = y`.
    pub dagger: bool,
    /// `F = F_G` for `G = F ∩ S̄(L)`, a filter of `S̄(L)`.
    pub ddagger: bool,
    /// `F` is the up-closure of some filter of `S̄(L)`.
    pub dagger_ddagger: bool,
    /// First pair `(x, y)` in `F` with `x ⊓̄ y ∉ F`.
    pub dagger_witness: Option<(usize, usize)>,
}

impl SConditions {
    pub fn agree(&self) -> bool {
        self.dagger == self.ddagger && self.ddagger == self.dagger_ddagger
    }
}

fn ensure_filter(l: &BoundedLattice, f: ElementSet) -> Result<(), FilterError> {
    if is_filter(l, f) {
        Ok(())
    } else {
        Err(FilterError::NotAFilter(l.render(f)))
    }
}

/// All pairs of `F` whose `⊓̄` leaves `F`, x-major.
pub fn dagger_witnesses(w: &Wcl<'_>, f: ElementSet) -> Vec<(usize, usize)> {
    f.iter().flat_map(|x| f.iter().map(move |y| (x, y))).filter(|&(x, y)| !f.contains(w.sqcap_bar(x, y))).collect()
}

pub fn s_conditions(w: &Wcl<'_>, f: ElementSet) -> Result<SConditions, FilterError> {
    let l = w.lattice();
    ensure_filter(l, f)?;
    let dagger_witness = dagger_witnesses(w, f).first().copied();
    let g = trace(w, f);
    let ddagger = is_skeleton_filter(w, g) && f_of(w, g) == f;
    let dagger_ddagger = skeleton_filters(w).iter().any(|&g| l.up_closure(g) == f);
    Ok(SConditions { dagger: dagger_witness.is_none(), ddagger, dagger_ddagger, dagger_witness })
}

pub fn is_s_filter(w: &Wcl<'_>, f: ElementSet) -> bool {
    is_filter(w.lattice(), f) && dagger_witnesses(w, f).is_empty()
}

/// A filter of `(S̄(L); ⊓̄, ∨)`: nonempty, up-closed inside `S̄(L)`, `⊓̄`-closed.
pub fn is_skeleton_filter(w: &Wcl<'_>, g: ElementSet) -> bool {
    let l = w.lattice();
    let sk = w.skeleton();
    !g.is_empty()
        && g.is_subset(sk)
        && g.iter().all(|x| l.up(x).intersection(sk).is_subset(g))
        && g.iter().all(|x| g.iter().all(|y| g.contains(w.sqcap_bar(x, y))))
}

/// Every filter of `S̄(L)`, ordered by size, then bitmask.
pub fn skeleton_filters(w: &Wcl<'_>) -> Vec<ElementSet> {
    let sk: Vec<usize> = w.skeleton().iter().collect();
    let mut out: Vec<ElementSet> = (1u64..1u64 << sk.len())
        .map(|mask| sk.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect())
        .filter(|&g| is_skeleton_filter(w, g))
        .collect();
    out.sort_by_key(|s: &ElementSet| (s.len(), s.bits()));
    out
}

fn f_of(w: &Wcl<'_>, g: ElementSet) -> ElementSet {
    w.lattice().elements().filter(|&x| g.contains(w.interior(x))).collect()
}

/// `F_G = {x | x^ΔΔ ∈ G}`.
pub fn f_from_skeleton_filter(w: &Wcl<'_>, g: ElementSet) -> Result<ElementSet, FilterError> {
    if !is_skeleton_filter(w, g) {
        return Err(FilterError::NotASkeletonFilter(w.lattice().render(g)));
    }
    Ok(f_of(w, g))
}

/// `F ∩ S̄(L)`.
pub fn trace(w: &Wcl<'_>, f: ElementSet) -> ElementSet {
    f.intersection(w.skeleton())
}

/// `S[X)`: the up-closure of the `⊓̄`-closure of `X`.
pub fn s_filter_generated(w: &Wcl<'_>, x: ElementSet) -> Result<ElementSet, FilterError> {
    if x.is_empty() {
        return Err(FilterError::EmptyGenerator);
    }
    if !x.is_subset(w.lattice().carrier()) {
        return Err(FilterError::BaseMismatch);
    }
    Ok(w.lattice().up_closure(sqcap_bar_closure(w, x)))
}

/// `F ⊻ G = S[F ∪ G)`.
pub fn s_join(w: &Wcl<'_>, f: ElementSet, g: ElementSet) -> Result<ElementSet, FilterError> {
    for s in [f, g] {
        if !is_s_filter(w, s) {
            return Err(FilterError::NotSFilter(w.lattice().render(s)));
        }
    }
    s_filter_generated(w, f.union(g))
}

/// `S[a) = [a^ΔΔ)`.
pub fn s_principal(w: &Wcl<'_>, a: usize) -> ElementSet {
    w.lattice().up(w.interior(a))
}

/// `SF(L)` in filter enumeration order.
pub fn enumerate_s_filters(w: &Wcl<'_>, cap: usize) -> Result<Vec<ElementSet>, FilterError> {
    Ok(enumerate_filters(w.lattice(), cap)?.into_iter().filter(|&f| is_s_filter(w, f)).collect())
}

/// The three conditions agree on every filter.
pub fn conditions_report(w: &Wcl<'_>, cap: usize) -> Result<LawReport, FilterError> {
    let l = w.lattice();
    let mut r = LawReport::new();
    let mut bad = None;
    for f in enumerate_filters(l, cap)? {
        if !s_conditions(w, f)?.agree() {
            bad = Some(f);
            break;
        }
    }
    r.check("sfilters.conditions-agree", bad.map(|f| witness!(l.render(f))));
    Ok(r)
}

/// `φ: F(S̄(L)) → SF(L)` and the correspondence of `★̄★̄`- and `★★`-closed parts.
pub fn phi_iso_check(w: &Wcl<'_>, cap: usize) -> Result<LawReport, FilterError> {
    let l = w.lattice();
    let show = |s: ElementSet| l.render(s);
    let gs = skeleton_filters(w);
    let sf = enumerate_s_filters(w, cap)?;
    let phi = |g: ElementSet| f_of(w, g);
    let sk = w.skeleton();
    let one = ElementSet::singleton(l.top());
    let mut r = LawReport::new();
    let pairs = || gs.iter().flat_map(|&a| gs.iter().map(move |&b| (a, b)));

    r.check("phi.into-s-filters", gs.iter().find(|&&g| !is_s_filter(w, phi(g))).map(|&g| witness!(show(g))));
    r.check("phi.trace-round-trip", gs.iter().find(|&&g| trace(w, phi(g)) != g).map(|&g| witness!(show(g))));
    r.check(
        "phi.injective",
        pairs().find(|&(a, b)| a != b && phi(a) == phi(b)).map(|(a, b)| witness!(show(a), show(b))),
    );
    r.check(
        "phi.order-iso",
        pairs().find(|&(a, b)| a.is_subset(b) != phi(a).is_subset(phi(b))).map(|(a, b)| witness!(show(a), show(b))),
    );
    let mut image: Vec<ElementSet> = gs.iter().map(|&g| phi(g)).collect();
    image.sort_by_key(|s| (s.len(), s.bits()));
    r.check("phi.onto-s-filters", (image != sf).then(|| image.iter().map(|&s| show(s)).collect()));
    r.check("phi.bounds", (phi(sk) != l.carrier() || phi(one) != one).then(|| witness!(show(phi(sk)), show(phi(one)))));
    r.check(
        "phi.star",
        gs.iter().find(|&&g| star_bar(w, g).map(phi).ok() != Some(star(w, phi(g)))).map(|&g| witness!(show(g))),
    );
    r.check(
        "sfilters.s-filter-trace-round-trip",
        sf.iter().find(|&&f| !is_skeleton_filter(w, trace(w, f)) || phi(trace(w, f)) != f).map(|&f| witness!(show(f))),
    );
    let fs = enumerate_filters(l, cap)?;
    r.check(
        "sfilters.trace-inclusion",
        fs.iter()
            .find(|&&f| is_skeleton_filter(w, trace(w, f)) && !phi(trace(w, f)).is_subset(f))
            .map(|&f| witness!(show(f))),
    );
    r.check(
        "sfilters.complete-lattice",
        sf.iter()
            .flat_map(|&a| sf.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| !sf.contains(&a.intersection(b)) || !sf.contains(&s_join(w, a, b).expect("s-filters")))
            .map(|(a, b)| witness!(show(a), show(b))),
    );

    // Closed parts: G = G★̄★̄ in F(S̄(L)) and F = F★★ in SF(L).
    let sb = |g: ElementSet| star_bar(w, g).expect("inside the skeleton");
    let closed_g: Vec<ElementSet> = gs.iter().copied().filter(|&g| sb(sb(g)) == g).collect();
    r.check(
        "phi.closed-parts-correspond",
        gs.iter().find(|&&g| (sb(sb(g)) == g) != (star(w, star(w, phi(g))) == phi(g))).map(|&g| witness!(show(g))),
    );
    let sk_join = |a: ElementSet, b: ElementSet| {
        // Filter of S̄(L) generated by a ∪ b.
        sqcap_bar_closure(w, a.union(b)).iter().fold(ElementSet::EMPTY, |acc, x| acc.union(l.up(x))).intersection(sk)
    };
    let pos = |s: ElementSet| closed_g.iter().position(|&t| t == s).unwrap_or(usize::MAX);
    let render = |k: usize| closed_g.get(k).map_or_else(|| String::from("?"), |&s| show(s));
    let ops = OrthoOps {
        size: closed_g.len(),
        leq: &|a, b| closed_g[a].is_subset(closed_g[b]),
        meet: &|a, b| pos(closed_g[a].intersection(closed_g[b])),
        join: &|a, b| pos(sb(sb(sk_join(closed_g[a], closed_g[b])))),
        complement: &|a| pos(sb(closed_g[a])),
        bottom: pos(one),
        top: pos(sk),
        render: &render,
    };
    r.extend_prefixed("phi.closed-parts.", ortholattice_laws(&ops));
    let cl = |f: ElementSet| star(w, star(w, f));
    r.check(
        "phi.closed-parts-hom",
        closed_g
            .iter()
            .flat_map(|&a| closed_g.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| {
                let join_l = cl(filter_join(l, phi(a), phi(b)).expect("filters"));
                phi(a.intersection(b)) != phi(a).intersection(phi(b))
                    || phi(sb(sb(sk_join(a, b)))) != join_l
                    || phi(sb(a)) != star(w, phi(a))
            })
            .map(|(a, b)| witness!(show(a), show(b))),
    );
    Ok(r)
}

/// Laws of `S[X)`, `S[a)` and `⊻`.
pub fn generation_laws(w: &Wcl<'_>, cap: usize) -> Result<LawReport, FilterError> {
    let l = w.lattice();
    let name = |a: usize| l.name(a).to_string();
    let show = |s: ElementSet| l.render(s);
    let sp = |a: usize| s_principal(w, a);
    let sj = |f: ElementSet, g: ElementSet| s_filter_generated(w, f.union(g)).expect("nonempty");
    let one = ElementSet::singleton(l.top());
    let pairs = || l.elements().flat_map(|a| l.elements().map(move |b| (a, b)));
    let mut r = LawReport::new();
    r.check(
        "sgen.principal",
        l.elements()
            .find(|&a| s_filter_generated(w, ElementSet::singleton(a)).ok() != Some(sp(a)))
            .map(|a| witness!(name(a))),
    );
    r.check(
        "sgen.bounds",
        (sp(l.bottom()) != l.carrier() || sp(l.top()) != one)
            .then(|| witness!(show(sp(l.bottom())), show(sp(l.top())))),
    );
    r.check(
        "sgen.complement-join",
        l.elements().find(|&a| sj(sp(a), sp(w.delta(a))) != l.carrier()).map(|a| witness!(name(a))),
    );
    r.check(
        "sgen.complement-meet",
        l.elements().find(|&a| sp(a).intersection(sp(w.delta(a))) != one).map(|a| witness!(name(a))),
    );
    // The literal identity needs (a∨b)^ΔΔ = a^ΔΔ ∨ b^ΔΔ, which fails in general.
    r.finding_if(
        "sgen.meet-is-under-sqcup",
        pairs()
            .find(|&(a, b)| sp(a).intersection(sp(b)) != sp(w.under_sqcup(a, b)))
            .map(|(a, b)| witness!(name(a), name(b))),
        "S[a) meet S[b) differs from S[a under-sqcup b) when (a join b)^DD exceeds a^DD join b^DD",
    );
    r.check(
        "sgen.under-sqcup-below-meet",
        pairs()
            .find(|&(a, b)| !sp(w.under_sqcup(a, b)).is_subset(sp(a).intersection(sp(b))))
            .map(|(a, b)| witness!(name(a), name(b))),
    );
    r.check(
        "sgen.meet-is-join-of-interiors",
        pairs()
            .find(|&(a, b)| sp(a).intersection(sp(b)) != sp(l.join(w.interior(a), w.interior(b))))
            .map(|(a, b)| witness!(name(a), name(b))),
    );
    let sk = w.skeleton();
    r.check(
        "sgen.meet-is-under-sqcup-on-skeleton",
        pairs()
            .filter(|&(a, b)| sk.contains(a) && sk.contains(b))
            .find(|&(a, b)| sp(a).intersection(sp(b)) != sp(w.under_sqcup(a, b)))
            .map(|(a, b)| witness!(name(a), name(b))),
    );
    r.check(
        "sgen.join-is-sqcap-bar",
        pairs().find(|&(a, b)| sj(sp(a), sp(b)) != sp(w.sqcap_bar(a, b))).map(|(a, b)| witness!(name(a), name(b))),
    );
    r.check(
        "sgen.antitone",
        pairs().find(|&(a, b)| l.leq(a, b) && !sp(b).is_subset(sp(a))).map(|(a, b)| witness!(name(a), name(b))),
    );
    r.check(
        "sgen.principal-iff-skeleton",
        l.elements().find(|&a| (sp(a) == l.up(a)) != w.skeleton().contains(a)).map(|a| witness!(name(a))),
    );
    // Over filters as generators: S[X) is the least S-filter containing X.
    let fs = enumerate_filters(l, cap)?;
    let sf: Vec<ElementSet> = fs.iter().copied().filter(|&f| is_s_filter(w, f)).collect();
    r.check(
        "sgen.least-s-filter",
        fs.iter()
            .find(|&&x| {
                let g = s_filter_generated(w, x).expect("nonempty");
                !is_s_filter(w, g) || sf.iter().any(|&h| x.is_subset(h) && !g.is_subset(h))
            })
            .map(|&x| witness!(show(x))),
    );
    r.check(
        "sgen.monotone",
        fs.iter()
            .flat_map(|&x| l.elements().map(move |a| (x, a)))
            .find(|&(x, a)| {
                !s_filter_generated(w, x)
                    .expect("nonempty")
                    .is_subset(s_filter_generated(w, x.with(a)).expect("nonempty"))
            })
            .map(|(x, a)| witness!(show(x), name(a))),
    );
    Ok(r)
}

/// `SF_p(L) = {S[a)}` with `∩`, `⊻`, `S[a)^⊥ = S[a^Δ)`, and `a ↦ S[a)` on `S̄(L)`.
pub fn s_principal_ortholattice(w: &Wcl<'_>) -> LawReport {
    let l = w.lattice();
    let sk = w.skeleton();
    let show = |s: ElementSet| l.render(s);
    let name = |a: usize| l.name(a).to_string();
    let sp = |a: usize| s_principal(w, a);
    let mut sfp: Vec<ElementSet> = l.elements().map(sp).collect();
    sfp.sort_by_key(|s| (s.len(), s.bits()));
    sfp.dedup();
    let rep = |s: ElementSet| l.meet_of(s);
    let perp = |s: ElementSet| sp(w.delta(rep(s)));
    let sj = |f: ElementSet, g: ElementSet| s_filter_generated(w, f.union(g)).expect("nonempty");
    let pos = |s: ElementSet| sfp.iter().position(|&t| t == s).unwrap_or(usize::MAX);
    let render = |k: usize| sfp.get(k).map_or_else(|| String::from("?"), |&s| show(s));
    let ops = OrthoOps {
        size: sfp.len(),
        leq: &|a, b| sfp[a].is_subset(sfp[b]),
        meet: &|a, b| pos(sfp[a].intersection(sfp[b])),
        join: &|a, b| pos(sj(sfp[a], sfp[b])),
        complement: &|a| pos(perp(sfp[a])),
        bottom: pos(ElementSet::singleton(l.top())),
        top: pos(l.carrier()),
        render: &render,
    };
    let mut r = LawReport::new();
    r.extend_prefixed("s-principal.", ortholattice_laws(&ops));
    r.check(
        "s-principal.complement-well-defined",
        l.elements()
            .flat_map(|a| l.elements().map(move |b| (a, b)))
            .find(|&(a, b)| sp(a) == sp(b) && sp(w.delta(a)) != sp(w.delta(b)))
            .map(|(a, b)| witness!(name(a), name(b))),
    );
    let img: Vec<ElementSet> = {
        let mut v: Vec<ElementSet> = sk.iter().map(sp).collect();
        v.sort_by_key(|s| (s.len(), s.bits()));
        v.dedup();
        v
    };
    r.check(
        "s-principal.bijective-on-skeleton",
        (img.len() != sk.len() || img != sfp).then(|| img.iter().map(|&s| show(s)).collect()),
    );
    let skp = || sk.iter().flat_map(|a| sk.iter().map(move |b| (a, b)));
    r.check(
        "s-principal.homomorphism",
        skp()
            .find(|&(a, b)| {
                sp(l.join(a, b)) != sp(a).intersection(sp(b))
                    || sp(w.sqcap_bar(a, b)) != sj(sp(a), sp(b))
                    || sp(w.delta(a)) != perp(sp(a))
            })
            .map(|(a, b)| witness!(name(a), name(b))),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn l6_conditions() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let e = |x| l.index_of(x).unwrap();

        let f5 = s_conditions(&w, s(&["v", "a", "b", "1"])).unwrap();
        assert!(!f5.dagger && !f5.ddagger && !f5.dagger_ddagger);
        assert!(dagger_witnesses(&w, s(&["v", "a", "b", "1"])).contains(&(e("a"), e("b"))));
        assert_eq!(f5.dagger_witness, Some((e("v"), e("v"))));

        let f3 = s_conditions(&w, s(&["b", "1"])).unwrap();
        assert!(f3.dagger && f3.ddagger && f3.dagger_ddagger);

        let f2 = s_conditions(&w, s(&["a", "1"])).unwrap();
        assert!(!f2.dagger && !f2.ddagger && !f2.dagger_ddagger);
        assert_eq!(f2.dagger_witness, Some((e("a"), e("a"))));
        // Restricting to distinct pairs does not rescue it: a ⊓̄ 1 = u.
        assert_eq!(w.sqcap_bar(e("a"), e("1")), e("u"));

        assert!(matches!(s_conditions(&w, s(&["a"])), Err(FilterError::NotAFilter(_))));
    }

    #[test]
    fn l6_s_filters_and_phi() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let sf = enumerate_s_filters(&w, 24).unwrap();
        assert_eq!(sf, [s(&["1"]), s(&["b", "1"]), s(&["u", "a", "1"]), l.carrier()]);
        let gs = skeleton_filters(&w);
        assert_eq!(gs, [s(&["1"]), s(&["u", "1"]), s(&["b", "1"]), s(&["0", "u", "b", "1"])]);
        assert_eq!(f_from_skeleton_filter(&w, s(&["u", "1"])).unwrap(), s(&["u", "a", "1"]));
        assert_eq!(f_from_skeleton_filter(&w, s(&["b", "1"])).unwrap(), s(&["b", "1"]));
        assert_eq!(f_from_skeleton_filter(&w, s(&["0", "u", "b", "1"])).unwrap(), l.carrier());
        assert_eq!(f_from_skeleton_filter(&w, s(&["1"])).unwrap(), s(&["1"]));
        assert!(matches!(f_from_skeleton_filter(&w, s(&["a", "1"])), Err(FilterError::NotASkeletonFilter(_))));
        // φ({u,1})★ = F4★ = F3 = φ({u,1}★̄)
        assert_eq!(star(&w, s(&["u", "a", "1"])), s(&["b", "1"]));
        assert_eq!(star_bar(&w, s(&["u", "1"])).unwrap(), s(&["b", "1"]));

        let r = phi_iso_check(&w, 24).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        let r = conditions_report(&w, 24).unwrap();
        assert!(r.all_pass());
    }

    #[test]
    fn traces() {
        let d7 = instances::l7();
        let w7 = d7.wcl().unwrap();
        let l7 = d7.lattice();
        let f = l7.set_of(["w", "a", "b", "1"]).unwrap();
        let t = trace(&w7, f);
        assert_eq!(l7.render(t), "{a,b,1}");
        assert!(!is_skeleton_filter(&w7, t));

        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let t5 = trace(&w, s(&["v", "a", "b", "1"]));
        assert_eq!(t5, s(&["b", "1"]));
        assert!(is_skeleton_filter(&w, t5));
        assert_eq!(f_from_skeleton_filter(&w, t5).unwrap(), s(&["b", "1"]));
        let f4 = s(&["u", "a", "1"]);
        assert_eq!(trace(&w, f4), s(&["u", "1"]));
        assert_eq!(f_from_skeleton_filter(&w, trace(&w, f4)).unwrap(), f4);
    }

    #[test]
    fn generation() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let e = |x| l.index_of(x).unwrap();
        assert_eq!(s_principal(&w, e("a")), s(&["u", "a", "1"]));
        assert_eq!(s_join(&w, s_principal(&w, e("a")), s_principal(&w, e("b"))).unwrap(), l.carrier());
        assert_eq!(s_principal(&w, e("1")), s(&["1"]));
        assert_eq!(s_principal(&w, e("0")), l.carrier());
        assert_eq!(s_filter_generated(&w, ElementSet::EMPTY), Err(FilterError::EmptyGenerator));
        assert!(matches!(s_join(&w, s(&["a", "1"]), s(&["1"])), Err(FilterError::NotSFilter(_))));
        for d in [instances::l6(), instances::l7(), instances::boolean(3), instances::chain_trivial(3)] {
            let w = d.wcl().unwrap();
            let r = generation_laws(&w, 24).unwrap();
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
            assert_eq!(r.status("sgen.meet-is-join-of-interiors"), Some(crate::laws::Status::Pass));
            let r = s_principal_ortholattice(&w);
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
            assert!(phi_iso_check(&w, 24).unwrap().all_pass());
        }
    }

    #[test]
    fn literal_meet_identity_fails_on_l7() {
        use crate::laws::Status;
        let d = instances::l7();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let e = |x| l.index_of(x).unwrap();
        assert_eq!(s_principal(&w, e("u")), l.carrier());
        assert_eq!(s_principal(&w, e("v")), l.carrier());
        assert_eq!(w.under_sqcup(e("u"), e("v")), e("1"));
        let r = generation_laws(&w, 24).unwrap();
        let res = r.get("sgen.meet-is-under-sqcup").unwrap();
        assert_eq!(res.status, Status::Finding);
        assert_eq!(res.witness.as_deref(), Some(&["u".to_string(), "v".to_string()][..]));
        let r6 = generation_laws(&instances::l6().wcl().unwrap(), 24).unwrap();
        assert_eq!(r6.status("sgen.meet-is-under-sqcup"), Some(Status::Pass));
    }

    #[test]
    fn s_principal_on_l6() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let e = |x| l.index_of(x).unwrap();
        let imgs: Vec<ElementSet> = ["0", "u", "b", "1"].iter().map(|&x| s_principal(&w, e(x))).collect();
        assert_eq!(imgs, [l.carrier(), s(&["u", "a", "1"]), s(&["b", "1"]), s(&["1"])]);
        assert_eq!(s_principal(&w, w.delta(e("u"))), s(&["b", "1"]));
        assert_eq!(s_principal(&w, e("u")).intersection(s_principal(&w, e("b"))), s(&["1"]));
    }
}
