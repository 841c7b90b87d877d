//! Statements made about the two worked examples, checked literally.
//! Two of them are known to be false and come back as findings.

use wdl_core::congruence::{
    check_partition, determination_congruence, enumerate_congruences, regularity_witness, theta_from_filter,
};
use wdl_core::filters::{enumerate_filters, star};
use wdl_core::laws::LawReport;
use wdl_core::sfilters::{
    dagger_witnesses, enumerate_s_filters, f_from_skeleton_filter, is_s_filter, skeleton_filters,
};
use wdl_core::spectra::{classify, Universe};
use wdl_core::{instances, BoundedLattice, Caps, Dicomplementation, ElementSet};

use crate::catalog::CatalogError;

pub const L6_IDS: [&str; 12] = [
    "claims.l6.filters",
    "claims.l6.s-filters",
    "claims.l6.phi-order-iso",
    "claims.l6.f5-fails-dagger",
    "claims.l6.f2-satisfies-dagger",
    "claims.l6.f2-is-s-filter",
    "claims.l6.principal-star",
    "claims.l6.f3-primary-not-maximal",
    "claims.l6.example-congruences",
    "claims.l6.theta-f4",
    "claims.l6.f5-not-a-cokernel",
    "claims.l6.phi-blocks-non-regular",
];

pub const L7_IDS: [&str; 2] = ["claims.l7.dual-skeleton", "claims.l7.w-row"];

fn sets(l: &BoundedLattice, names: &[&[&str]]) -> Vec<ElementSet> {
    names.iter().map(|n| l.set_of(n.iter().copied()).expect("names from the instance")).collect()
}

fn mismatch(l: &BoundedLattice, got: &[ElementSet]) -> Vec<String> {
    got.iter().map(|&s| l.render(s)).collect()
}

fn l6_claims(d: &Dicomplementation, caps: Caps) -> Result<LawReport, CatalogError> {
    let w = d.wcl()?;
    let l = d.lattice();
    let e = |x: &str| l.index_of(x).expect("L6 element");
    let s = |xs: &[&str]| l.set_of(xs.iter().copied()).expect("L6 elements");
    let mut r = LawReport::new();

    let fs = enumerate_filters(l, caps.filters)?;
    let listed: Vec<Vec<&str>> = instances::l6_filter_names();
    let listed: Vec<ElementSet> = listed.iter().map(|n| s(n)).collect();
    r.check("claims.l6.filters", (fs != listed).then(|| mismatch(l, &fs)));

    let sf = enumerate_s_filters(&w, caps.filters)?;
    let sf_listed = sets(l, &[&["1"], &["b", "1"], &["u", "a", "1"], &["0", "u", "v", "a", "b", "1"]]);
    r.check("claims.l6.s-filters", (sf != sf_listed).then(|| mismatch(l, &sf)));

    let gs = skeleton_filters(&w);
    let gs_listed = sets(l, &[&["1"], &["u", "1"], &["b", "1"], &["0", "u", "b", "1"]]);
    let images: Vec<ElementSet> = gs.iter().map(|&g| f_from_skeleton_filter(&w, g)).collect::<Result<_, _>>()?;
    let order_iso = gs
        .iter()
        .zip(&images)
        .all(|(g, fg)| gs.iter().zip(&images).all(|(h, fh)| g.is_subset(*h) == fg.is_subset(*fh)));
    let mut sorted = images.clone();
    sorted.sort_by_key(|s| (s.len(), s.bits()));
    r.check(
        "claims.l6.phi-order-iso",
        (gs != gs_listed || sorted != sf_listed || !order_iso).then(|| mismatch(l, &images)),
    );

    let f5 = s(&["v", "a", "b", "1"]);
    let (a, b) = (e("a"), e("b"));
    let f5_ok = dagger_witnesses(&w, f5).contains(&(a, b)) && w.sqcap_bar(a, b) == l.bottom();
    r.check("claims.l6.f5-fails-dagger", (!f5_ok).then(|| vec!["a".into(), "b".into()]));

    let f2 = s(&["a", "1"]);
    let f2_witness = dagger_witnesses(&w, f2)
        .first()
        .map(|&(x, y)| vec![l.name(x).to_string(), l.name(y).to_string(), l.name(w.sqcap_bar(x, y)).to_string()]);
    r.erratum(
        "claims.l6.f2-satisfies-dagger",
        f2_witness.clone(),
        "F2 = {a,1} is claimed closed under sqcap-bar, but a sqcap-bar a = a^DD = u is not in F2",
    );
    r.erratum(
        "claims.l6.f2-is-s-filter",
        (!is_s_filter(&w, f2)).then(|| f2_witness.unwrap_or_default()),
        "F2 is called an S-filter, but it fails the closure condition",
    );

    r.check("claims.l6.principal-star", (star(&w, l.up(a)) != l.up(b)).then(|| vec![l.render(star(&w, l.up(a)))]));

    let f3 = classify(&w, s(&["b", "1"]), Universe::Lattice, caps.filters)?;
    r.check("claims.l6.f3-primary-not-maximal", (!f3.is_primary || f3.is_maximal).then(|| vec!["{b,1}".into()]));

    let ex1 = check_partition(&w, &sets(l, &[&["0", "u"], &["b", "1"], &["a", "v"]]))?;
    let ex2 = check_partition(&w, &sets(l, &[&["0", "b", "v"], &["u", "a", "1"]]))?;
    r.check("claims.l6.example-congruences", ex1.or(ex2).map(|v| v.names(l)));
    let cap = caps.congruences.min(caps.filters);
    let t4 = theta_from_filter(&w, s(&["u", "a", "1"]))?;
    r.check("claims.l6.theta-f4", (t4.render(l) != "{0,v,b}|{u,a,1}").then(|| vec![t4.render(l)]));

    let con = enumerate_congruences(&w, cap)?;
    r.check("claims.l6.f5-not-a-cokernel", con.iter().find(|c| c.cokernel(l) == f5).map(|c| vec![c.render(l)]));
    let phi = determination_congruence(&w)?;
    let non_regular = regularity_witness(&con).is_some();
    r.check(
        "claims.l6.phi-blocks-non-regular",
        (phi.render(l) != "{0,v}|{u,a}|{b}|{1}" || !non_regular).then(|| vec![phi.render(l)]),
    );
    Ok(r)
}

fn l7_claims(d: &Dicomplementation) -> Result<LawReport, CatalogError> {
    let w = d.wcl()?;
    let l = d.lattice();
    let mut r = LawReport::new();
    let sk = w.skeleton();
    r.check("claims.l7.dual-skeleton", (l.render(sk) != "{0,a,b,1}").then(|| vec![l.render(sk)]));
    let x = l.index_of("w").expect("L7 element");
    let row = (l.name(w.delta(x)), l.name(d.nabla_table()?[x]));
    r.check("claims.l7.w-row", (row != ("1", "0")).then(|| vec![row.0.to_string(), row.1.to_string()]));
    Ok(r)
}

/// Claims attach to the exact builtin instances; every other input gets
/// the same ids as skips, so the catalog is complete for every subject.
pub fn source_claims(d: &Dicomplementation, caps: Caps) -> Result<LawReport, CatalogError> {
    let mut r = LawReport::new();
    if *d == instances::l6() {
        r.extend(l6_claims(d, caps)?);
    } else {
        L6_IDS.iter().for_each(|id| r.skip(*id, "instance is not L6"));
    }
    if *d == instances::l7() {
        r.extend(l7_claims(d)?);
    } else {
        L7_IDS.iter().for_each(|id| r.skip(*id, "instance is not L7"));
    }
    Ok(r)
}
