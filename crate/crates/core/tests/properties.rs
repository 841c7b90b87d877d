use proptest::prelude::*;
use proptest::sample::Index;

use wdl_core::congruence::{enumerate_congruences, principal_congruence, theta_from_filter, Congruence};
use wdl_core::dicomplement::{enumerate, ComplementSide};
use wdl_core::filters::{enumerate_filters, filter_generated, filter_join};
use wdl_core::lattice::small_lattices;
use wdl_core::sfilters::{enumerate_s_filters, s_conditions};
use wdl_core::spectra::{classify_all, extend_to_primary, Universe};
use wdl_core::{check_identities, instances, Dicomplementation, ElementSet};

/// A lattice with at most five elements and one of its dicomplementations
/// (or weak complementations), picked by the two indices.
fn pick(n: usize, li: Index, di: Index, side: ComplementSide) -> Option<Dicomplementation> {
    let lats = small_lattices(n);
    let lat = li.get(&lats);
    let ds = enumerate(lat, side, 8).unwrap();
    (!ds.is_empty()).then(|| di.get(&ds).clone())
}

fn wcl_case() -> impl Strategy<Value = Dicomplementation> {
    (1usize..=5, any::<Index>(), any::<Index>())
        .prop_filter_map("no tables", |(n, li, di)| pick(n, li, di, ComplementSide::Delta))
}

fn wdl_case() -> impl Strategy<Value = Dicomplementation> {
    (1usize..=5, any::<Index>(), any::<Index>())
        .prop_filter_map("no tables", |(n, li, di)| pick(n, li, di, ComplementSide::Both))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn enumerated_tables_reattach(d in wdl_case()) {
        let again = Dicomplementation::attach(
            d.lattice().clone(),
            Some(d.delta_table().unwrap().to_vec()),
            Some(d.nabla_table().unwrap().to_vec()),
        );
        prop_assert_eq!(again.as_ref(), Ok(&d));
    }

    #[test]
    fn dual_is_an_involution(d in wdl_case()) {
        prop_assert_eq!(d.dual().dual(), d.clone());
        let r = check_identities(&d.dual());
        prop_assert!(r.all_pass());
    }

    #[test]
    fn identities_hold(d in wdl_case()) {
        let r = check_identities(&d);
        prop_assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn squares_stay_valid(d in wdl_case()) {
        prop_assume!(d.lattice().len() <= 4);
        let p = d.power(2, 64).unwrap();
        prop_assert_eq!(p.lattice().len(), d.lattice().len().pow(2));
        prop_assert!(check_identities(&p).all_pass());
    }

    #[test]
    fn s_conditions_agree(d in wcl_case()) {
        let w = d.wcl().unwrap();
        for f in enumerate_filters(w.lattice(), 24).unwrap() {
            prop_assert!(s_conditions(&w, f).unwrap().agree());
        }
    }

    #[test]
    fn filter_join_is_generated_union(d in wcl_case()) {
        let l = d.lattice();
        let fs = enumerate_filters(l, 24).unwrap();
        for &f in &fs {
            for &g in &fs {
                prop_assert_eq!(filter_join(l, f, g).unwrap(), filter_generated(l, f.union(g)).unwrap());
            }
        }
    }

    #[test]
    fn spectral_invariants(d in wcl_case()) {
        let w = d.wcl().unwrap();
        let l = w.lattice();
        for c in classify_all(&w, Universe::Lattice, 24).unwrap() {
            prop_assert!(!(c.is_proper && c.is_prime) || c.is_primary);
        }
        for c in classify_all(&w, Universe::Skeleton, 24).unwrap() {
            prop_assert_eq!(c.is_primary, c.is_prime);
        }
        for f in enumerate_s_filters(&w, 24).unwrap() {
            if f.contains(l.bottom()) {
                continue;
            }
            let e = extend_to_primary(&w, f).unwrap();
            prop_assert!(f.is_subset(e));
            let cs = classify_all(&w, Universe::SFilters, 24).unwrap();
            prop_assert!(cs.iter().any(|c| c.filter == e && c.is_primary && c.is_maximal));
        }
        let maximal: Vec<ElementSet> =
            classify_all(&w, Universe::Lattice, 24).unwrap().into_iter().filter(|c| c.is_maximal).map(|c| c.filter).collect();
        for a in l.elements() {
            prop_assert_eq!(maximal.contains(&l.up(a)), l.atoms().contains(a));
        }
    }

    #[test]
    fn congruence_invariants(d in wcl_case()) {
        let w = d.wcl().unwrap();
        let l = w.lattice();
        let n = l.len();
        let con = enumerate_congruences(&w, 12).unwrap();
        for x in l.elements() {
            prop_assert!(principal_congruence(&w, x, x).is_diagonal());
        }
        for c in &con {
            if c.related(l.bottom(), l.top()) {
                prop_assert_eq!(c, &Congruence::full(n));
            }
        }
        if l.is_distributive() {
            for f in enumerate_s_filters(&w, 24).unwrap() {
                let t = theta_from_filter(&w, f).unwrap();
                prop_assert_eq!(t.cokernel(l), f);
                prop_assert!(con.contains(&t));
            }
        }
    }
}

#[test]
fn builtins_pass_identities() {
    for d in [instances::l6(), instances::l7(), instances::boolean(1), instances::boolean(2), instances::boolean(3)] {
        assert!(check_identities(&d).all_pass());
    }
}
