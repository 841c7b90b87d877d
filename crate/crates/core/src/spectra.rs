//! Prime, primary and maximal filters in three universes: filters of `L`,
//! filters of `(S̄(L); ⊓̄, ∨)`, and S-filters.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::dicomplement::Wcl;
use crate::filters::{enumerate_filters, is_filter, sqcap_bar_closure, FilterError};
use crate::laws::{witness, LawReport};
use crate::set::ElementSet;
use crate::sfilters::{
    enumerate_s_filters, f_from_skeleton_filter, is_s_filter, is_skeleton_filter, s_principal, skeleton_filters, trace,
};

/// Where a filter lives. Maximality is always taken among the proper
/// members of the same universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    Lattice,
    Skeleton,
    SFilters,
}

impl Universe {
    pub fn as_str(self) -> &'static str {
        match self {
            Universe::Lattice => "lattice",
            Universe::Skeleton => "skeleton",
            Universe::SFilters => "s-filters",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterClassification {
    pub filter: ElementSet,
    pub universe: Universe,
    pub is_prime: bool,
    pub is_primary: bool,
    pub is_maximal: bool,
    pub is_proper: bool,
    /// First `(x, y)` with `x ∨ y` in the filter but neither `x` nor `y`.
    pub prime_witness: Option<(usize, usize)>,
    /// First `x` with neither `x` nor `x^Δ` in the filter.
    pub primary_witness: Option<usize>,
}

/// Elements over which the prime and primary tests quantify.
fn ground(w: &Wcl<'_>, universe: Universe) -> ElementSet {
    match universe {
        Universe::Skeleton => w.skeleton(),
        Universe::Lattice | Universe::SFilters => w.lattice().carrier(),
    }
}

/// Every filter of the universe, in enumeration order.
pub fn universe_filters(w: &Wcl<'_>, universe: Universe, cap: usize) -> Result<Vec<ElementSet>, FilterError> {
    match universe {
        Universe::Lattice => enumerate_filters(w.lattice(), cap),
        Universe::Skeleton => {
            let n = w.skeleton().len();
            if n > cap {
                return Err(FilterError::SizeCapExceeded { size: n, cap });
            }
            Ok(skeleton_filters(w))
        }
        Universe::SFilters => enumerate_s_filters(w, cap),
    }
}

fn belongs(w: &Wcl<'_>, universe: Universe, f: ElementSet) -> bool {
    match universe {
        Universe::Lattice => is_filter(w.lattice(), f),
        Universe::Skeleton => is_skeleton_filter(w, f),
        Universe::SFilters => is_s_filter(w, f),
    }
}

fn prime_witness(w: &Wcl<'_>, universe: Universe, f: ElementSet) -> Option<(usize, usize)> {
    let l = w.lattice();
    let g = ground(w, universe);
    g.iter()
        .flat_map(|x| g.iter().map(move |y| (x, y)))
        .find(|&(x, y)| f.contains(l.join(x, y)) && !f.contains(x) && !f.contains(y))
}

fn primary_witness(w: &Wcl<'_>, universe: Universe, f: ElementSet) -> Option<usize> {
    ground(w, universe).iter().find(|&x| !f.contains(x) && !f.contains(w.delta(x)))
}

fn classify_in(w: &Wcl<'_>, universe: Universe, f: ElementSet, all: &[ElementSet]) -> FilterClassification {
    let bottom = w.lattice().bottom();
    let is_proper = !f.contains(bottom);
    let is_maximal = is_proper && !all.iter().any(|&g| !g.contains(bottom) && f.is_proper_subset(g));
    let prime_witness = prime_witness(w, universe, f);
    let primary_witness = primary_witness(w, universe, f);
    FilterClassification {
        filter: f,
        universe,
        is_prime: prime_witness.is_none(),
        is_primary: primary_witness.is_none(),
        is_maximal,
        is_proper,
        prime_witness,
        primary_witness,
    }
}

/// Prime and primary are the literal quantified conditions, so the whole
/// universe counts as both; the theorems below restrict to proper filters.
pub fn classify(
    w: &Wcl<'_>,
    f: ElementSet,
    universe: Universe,
    cap: usize,
) -> Result<FilterClassification, FilterError> {
    if !belongs(w, universe, f) {
        return Err(FilterError::UniverseMismatch(w.lattice().render(f)));
    }
    let all = universe_filters(w, universe, cap)?;
    Ok(classify_in(w, universe, f, &all))
}

/// The classification of every filter of the universe.
pub fn classify_all(w: &Wcl<'_>, universe: Universe, cap: usize) -> Result<Vec<FilterClassification>, FilterError> {
    let all = universe_filters(w, universe, cap)?;
    Ok(all.iter().map(|&f| classify_in(w, universe, f, &all)).collect())
}

/// The filter of `S̄(L)` generated by `x ⊆ S̄(L)`.
fn skeleton_filter_generated(w: &Wcl<'_>, x: ElementSet) -> ElementSet {
    w.lattice().up_closure(sqcap_bar_closure(w, x)).intersection(w.skeleton())
}

/// A primary S-filter above `f`. The trace is grown one skeleton element at
/// a time, always the smallest index that keeps it proper, until maximal.
pub fn extend_to_primary(w: &Wcl<'_>, f: ElementSet) -> Result<ElementSet, FilterError> {
    let l = w.lattice();
    if !is_s_filter(w, f) {
        return Err(FilterError::NotSFilter(l.render(f)));
    }
    if f.contains(l.bottom()) {
        return Err(FilterError::NotProper(l.render(f)));
    }
    let mut g = trace(w, f);
    'grow: loop {
        for x in w.skeleton().difference(g).iter() {
            let h = skeleton_filter_generated(w, g.with(x));
            if !h.contains(l.bottom()) {
                g = h;
                continue 'grow;
            }
        }
        break;
    }
    f_from_skeleton_filter(w, g)
}

/// The prime/primary/maximal theorems, the correspondence of maximal
/// filters of `S̄(L)` with maximal S-filters, the atom criteria and the
/// extension of proper S-filters to primary ones.
pub fn verify_spectral_theorems(w: &Wcl<'_>, cap: usize) -> Result<LawReport, FilterError> {
    let l = w.lattice();
    let show = |s: ElementSet| l.render(s);
    let name = |a: usize| l.name(a).to_string();
    let on_l = classify_all(w, Universe::Lattice, cap)?;
    let on_sk = classify_all(w, Universe::Skeleton, cap)?;
    let on_sf = classify_all(w, Universe::SFilters, cap)?;
    let find = |cs: &[FilterClassification], bad: &dyn Fn(&FilterClassification) -> bool| -> Option<Vec<String>> {
        cs.iter().find(|c| bad(c)).map(|c| witness!(show(c.filter)))
    };
    let mut r = LawReport::new();

    r.check("spectra.prime-is-primary", find(&on_l, &|c| c.is_proper && c.is_prime && !c.is_primary));
    r.check("spectra.maximal-is-primary", find(&on_l, &|c| c.is_maximal && !c.is_primary));
    r.check("spectra.skeleton.primary-iff-prime", find(&on_sk, &|c| c.is_primary != c.is_prime));
    r.check("spectra.skeleton.primary-is-maximal", find(&on_sk, &|c| c.is_proper && c.is_primary && !c.is_maximal));
    r.check("spectra.s-filter.prime-is-maximal", find(&on_sf, &|c| c.is_proper && c.is_prime && !c.is_maximal));

    // Primary is checked against all of L even though the universe is SF(L).
    r.check(
        "spectra.s-filter.primary-iff-trace-primary",
        on_sf
            .iter()
            .find(|c| c.is_primary != primary_witness(w, Universe::Skeleton, trace(w, c.filter)).is_none())
            .map(|c| witness!(show(c.filter))),
    );
    r.check(
        "spectra.s-filter.primary-iff-trace-prime",
        on_sf
            .iter()
            .find(|c| c.is_primary != prime_witness(w, Universe::Skeleton, trace(w, c.filter)).is_none())
            .map(|c| witness!(show(c.filter))),
    );
    // Prime filters of S̄(L) and primary S-filters are in bijection via E ↦ F_E.
    let primary_sf: Vec<ElementSet> = on_sf.iter().filter(|c| c.is_primary).map(|c| c.filter).collect();
    let mut images: Vec<ElementSet> = on_sk
        .iter()
        .filter(|c| c.is_prime)
        .map(|c| f_from_skeleton_filter(w, c.filter).expect("skeleton filter"))
        .collect();
    images.sort_by_key(|s| (s.len(), s.bits()));
    r.check(
        "spectra.prime-skeleton-filters-onto-primary-s-filters",
        (images != primary_sf).then(|| witness!(images.len(), primary_sf.len())),
    );

    let max_sf = |f: ElementSet| on_sf.iter().any(|c| c.filter == f && c.is_maximal);
    r.check(
        "spectra.maximal-correspondence",
        on_sk
            .iter()
            .find(|c| c.is_maximal != max_sf(f_from_skeleton_filter(w, c.filter).expect("skeleton filter")))
            .map(|c| witness!(show(c.filter))),
    );

    let max_l = |f: ElementSet| on_l.iter().any(|c| c.filter == f && c.is_maximal);
    let atoms = l.atoms();
    r.check(
        "spectra.principal-maximal-iff-atom",
        l.elements().find(|&a| max_l(l.up(a)) != atoms.contains(a)).map(|a| witness!(name(a))),
    );
    let sk = w.skeleton();
    let sk_atoms: ElementSet =
        sk.iter().filter(|&a| a != l.bottom() && l.down(a).intersection(sk).len() == 2).collect();
    let atom_mismatch = |a: usize| max_sf(s_principal(w, a)) != sk_atoms.contains(a);
    r.check(
        "spectra.s-principal-maximal-iff-skeleton-atom",
        sk.iter().find(|&a| atom_mismatch(a)).map(|a| witness!(name(a))),
    );
    r.finding_if(
        "spectra.s-principal-maximal-iff-skeleton-atom-unrestricted",
        l.elements().find(|&a| atom_mismatch(a)).map(|a| witness!(name(a))),
        "S[a) = S[a^DD) is maximal whenever a^DD is a skeleton atom, also for a outside the dual skeleton",
    );

    let mut bad = None;
    for c in on_sf.iter().filter(|c| c.is_proper) {
        let e = extend_to_primary(w, c.filter)?;
        if !c.filter.is_subset(e)
            || !is_s_filter(w, e)
            || !max_sf(e)
            || primary_witness(w, Universe::Lattice, e).is_some()
        {
            bad = Some(witness!(show(c.filter), show(e)));
            break;
        }
    }
    r.check("spectra.extends-to-primary", bad);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicomplement::{enumerate, ComplementSide};
    use crate::instances;
    use crate::lattice::small_lattices;
    use crate::laws::Status;

    #[test]
    fn l6_classification() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        let e = |x| l.index_of(x).unwrap();

        let f3 = classify(&w, s(&["b", "1"]), Universe::Lattice, 24).unwrap();
        assert!(f3.is_primary && !f3.is_maximal && f3.is_proper);
        let f2 = classify(&w, s(&["a", "1"]), Universe::Lattice, 24).unwrap();
        assert!(!f2.is_primary);
        assert_eq!(f2.primary_witness, Some(e("u")));
        let f4 = classify(&w, s(&["u", "a", "1"]), Universe::Lattice, 24).unwrap();
        assert!(f4.is_maximal && f4.is_primary);

        let e1 = classify(&w, s(&["u", "1"]), Universe::Skeleton, 24).unwrap();
        assert!(e1.is_primary && e1.is_prime && e1.is_maximal);
        assert!(matches!(classify(&w, s(&["u", "1"]), Universe::Lattice, 24), Err(FilterError::UniverseMismatch(_))));
        assert!(matches!(classify(&w, s(&["a", "1"]), Universe::SFilters, 24), Err(FilterError::UniverseMismatch(_))));

        let maximal = |u| -> Vec<ElementSet> {
            classify_all(&w, u, 24).unwrap().into_iter().filter(|c| c.is_maximal).map(|c| c.filter).collect()
        };
        assert_eq!(maximal(Universe::Lattice), [s(&["u", "a", "1"]), s(&["v", "a", "b", "1"])]);
        assert!(classify_all(&w, Universe::Lattice, 24).unwrap().iter().all(|c| !c.is_maximal || c.is_primary));
        assert_eq!(maximal(Universe::SFilters), [s(&["b", "1"]), s(&["u", "a", "1"])]);
        assert_eq!(s_principal(&w, e("u")), s(&["u", "a", "1"]));
        assert_eq!(s_principal(&w, e("b")), s(&["b", "1"]));
    }

    #[test]
    fn l6_extension() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let l = d.lattice();
        let s = |xs: &[&str]| l.set_of(xs.iter().copied()).unwrap();
        assert_eq!(extend_to_primary(&w, s(&["1"])).unwrap(), s(&["u", "a", "1"]));
        assert_eq!(extend_to_primary(&w, s(&["b", "1"])).unwrap(), s(&["b", "1"]));
        assert_eq!(extend_to_primary(&w, s(&["u", "a", "1"])).unwrap(), s(&["u", "a", "1"]));
        assert!(matches!(extend_to_primary(&w, l.carrier()), Err(FilterError::NotProper(_))));
        assert!(matches!(extend_to_primary(&w, s(&["a", "1"])), Err(FilterError::NotSFilter(_))));
    }

    #[test]
    fn l6_report() {
        let d = instances::l6();
        let w = d.wcl().unwrap();
        let r = verify_spectral_theorems(&w, 24).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        // a ∉ S̄(L6) but S[a) = [u) is maximal.
        let res = r.get("spectra.s-principal-maximal-iff-skeleton-atom-unrestricted").unwrap();
        assert_eq!(res.status, Status::Finding);
        assert_eq!(res.witness.as_deref(), Some(&["a".to_string()][..]));
    }

    /// Independent restatement of the definitions over index ranges.
    fn naive_prime(w: &Wcl<'_>, f: ElementSet) -> bool {
        let l = w.lattice();
        let n = l.len();
        (0..n).all(|x| (0..n).all(|y| !f.contains(l.join(x, y)) || f.contains(x) || f.contains(y)))
    }

    #[test]
    fn small_corpus() {
        for n in 1..=5 {
            for lat in small_lattices(n) {
                for d in enumerate(&lat, ComplementSide::Delta, 8).unwrap() {
                    let w = d.wcl().unwrap();
                    let r = verify_spectral_theorems(&w, 24).unwrap();
                    assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
                    for c in classify_all(&w, Universe::Lattice, 24).unwrap() {
                        assert_eq!(c.is_prime, naive_prime(&w, c.filter));
                    }
                }
            }
        }
        for d in [instances::l7(), instances::boolean(3), instances::chain_trivial(4)] {
            let w = d.wcl().unwrap();
            assert!(verify_spectral_theorems(&w, 24).unwrap().all_pass());
        }
    }
}
