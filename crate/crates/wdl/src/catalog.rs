//! The law suites behind each subcommand, and the full catalog.

use thiserror::Error;
use wdl_core::congruence::{congruence_laws, CongruenceError};
use wdl_core::dicomplement::axiom_report;
use wdl_core::filters::{filter_lattice_dual_wcl, principal_dual_iso, pseudocomplement_checks, FilterError};
use wdl_core::sfilters::{conditions_report, generation_laws, phi_iso_check, s_principal_ortholattice};
use wdl_core::spectra::verify_spectral_theorems;
use wdl_core::{check_identities, Caps, DicomplementError, Dicomplementation, LawReport, Side, Wcl};

use crate::claims::source_claims;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Dicomplement(#[from] DicomplementError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}

impl CatalogError {
    /// A size cap stopped the computation, as opposed to bad input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            CatalogError::Dicomplement(DicomplementError::SizeCapExceeded { .. })
                | CatalogError::Filter(FilterError::SizeCapExceeded { .. })
                | CatalogError::Filter(FilterError::Dicomplement(DicomplementError::SizeCapExceeded { .. }))
                | CatalogError::Congruence(CongruenceError::SizeCapExceeded { .. })
                | CatalogError::Congruence(CongruenceError::Filter(FilterError::SizeCapExceeded { .. }))
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Identities,
    Filters,
    SFilters,
    Spectra,
    Congruences,
    Claims,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::Identities,
        Suite::Filters,
        Suite::SFilters,
        Suite::Spectra,
        Suite::Congruences,
        Suite::Claims,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Identities => "identities",
            Suite::Filters => "filters",
            Suite::SFilters => "sfilters",
            Suite::Spectra => "spectra",
            Suite::Congruences => "congruences",
            Suite::Claims => "claims",
        }
    }
}

fn with_wcl(
    d: &Dicomplementation,
    suite: Suite,
    f: impl FnOnce(&Wcl<'_>) -> Result<LawReport, CatalogError>,
) -> Result<LawReport, CatalogError> {
    match d.wcl() {
        Ok(w) => f(&w),
        Err(_) => {
            let mut r = LawReport::new();
            r.skip(suite.as_str(), "no delta table");
            Ok(r)
        }
    }
}

fn skeleton_laws(d: &Dicomplementation) -> LawReport {
    let mut r = LawReport::new();
    for (side, prefix) in [(Side::Interior, "skeleton.interior."), (Side::Closed, "skeleton.closed.")] {
        match d.skeleton_algebra(side) {
            Ok(alg) => r.extend_prefixed(prefix, alg.laws(d.lattice())),
            Err(DicomplementError::OrtholawViolation { law, witness }) => r.fail(format!("{prefix}{law}"), witness),
            Err(_) => r.skip(prefix.trim_end_matches('.'), "table absent"),
        }
    }
    r
}

pub fn run_suite(d: &Dicomplementation, suite: Suite, caps: Caps) -> Result<LawReport, CatalogError> {
    let l = d.lattice();
    match suite {
        Suite::Axioms => Ok(axiom_report(l, d.delta_table().ok(), d.nabla_table().ok())),
        Suite::Identities => {
            let mut r = check_identities(d);
            r.extend(skeleton_laws(d));
            r.extend(d.nearlattice_check());
            Ok(r)
        }
        Suite::Filters => with_wcl(d, suite, |_| {
            let (_, mut r) = filter_lattice_dual_wcl(d, caps.filters)?;
            r.extend(pseudocomplement_checks(d, caps.filters)?);
            r.extend(principal_dual_iso(d, caps.filters)?);
            Ok(r)
        }),
        Suite::SFilters => with_wcl(d, suite, |w| {
            let mut r = conditions_report(w, caps.filters)?;
            r.extend(phi_iso_check(w, caps.filters)?);
            r.extend(generation_laws(w, caps.filters)?);
            r.extend(s_principal_ortholattice(w));
            Ok(r)
        }),
        Suite::Spectra => with_wcl(d, suite, |w| Ok(verify_spectral_theorems(w, caps.filters)?)),
        Suite::Congruences => with_wcl(d, suite, |w| Ok(congruence_laws(w, caps.congruences.min(caps.filters))?)),
        Suite::Claims => source_claims(d, caps),
    }
}

/// Every suite in order.
pub fn verify_all(d: &Dicomplementation, caps: Caps) -> Result<LawReport, CatalogError> {
    let mut r = LawReport::new();
    for suite in Suite::ALL {
        r.extend(run_suite(d, suite, caps)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use wdl_core::{BoundedLattice, Status};

    #[test]
    fn suites_are_clean_on_l7() {
        let d = builtin("L7").unwrap();
        for suite in Suite::ALL {
            let r = run_suite(&d, suite, Caps::default()).unwrap();
            assert!(!r.is_empty(), "{}", suite.as_str());
            assert_eq!(r.count(Status::Fail), 0, "{}: {:?}", suite.as_str(), r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn missing_delta_skips_the_suite() {
        let d = builtin("B4").unwrap().nabla_reduct().unwrap();
        let r = run_suite(&d, Suite::Spectra, Caps::default()).unwrap();
        assert_eq!(r.status("spectra"), Some(Status::Skipped));
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn caps_refuse() {
        let d = Dicomplementation::trivial(BoundedLattice::chain(9).unwrap());
        let e = run_suite(&d, Suite::Filters, Caps::uniform(8)).unwrap_err();
        assert!(e.is_refusal(), "{e}");
    }
}
