//! JSON shapes for command output. Field order and list order are fixed,
//! so output is byte-for-byte reproducible.

use serde::{Deserialize, Serialize};
use wdl_core::congruence::{Congruence, StructureFlags};
use wdl_core::spectra::FilterClassification;
use wdl_core::{BoundedLattice, ElementSet, LawReport, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawEntry {
    pub id: String,
    /// One of `pass`, `fail`, `finding`, `skipped`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub suite: String,
    pub results: Vec<LawEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(subject: &str, suite: &str, laws: &LawReport) -> Self {
        let results = laws
            .results
            .iter()
            .map(|r| LawEntry {
                id: r.id.clone(),
                status: r.status.as_str().to_string(),
                witness: r.witness.clone(),
                note: r.note.clone(),
            })
            .collect();
        let summary = Summary {
            pass: laws.count(Status::Pass),
            fail: laws.count(Status::Fail),
            finding: laws.count(Status::Finding),
            skipped: laws.count(Status::Skipped),
        };
        Report { subject: subject.to_string(), suite: suite.to_string(), results, summary }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }
}

pub type NamedSet = Vec<String>;

pub fn named(l: &BoundedLattice, s: ElementSet) -> NamedSet {
    l.set_names(s)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidateOutput {
    pub subject: String,
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    pub has_delta: bool,
    pub has_nabla: bool,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiltersOutput {
    pub subject: String,
    pub filters: Vec<NamedSet>,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiEntry {
    pub skeleton_filter: NamedSet,
    pub s_filter: NamedSet,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SFiltersOutput {
    pub subject: String,
    pub s_filters: Vec<NamedSet>,
    pub phi: Vec<PhiEntry>,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub universe: String,
    pub filter: NamedSet,
    pub prime: bool,
    pub primary: bool,
    pub maximal: bool,
    pub proper: bool,
}

impl ClassificationEntry {
    pub fn new(l: &BoundedLattice, c: &FilterClassification) -> Self {
        ClassificationEntry {
            universe: c.universe.as_str().to_string(),
            filter: named(l, c.filter),
            prime: c.is_prime,
            primary: c.is_primary,
            maximal: c.is_maximal,
            proper: c.is_proper,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectraOutput {
    pub subject: String,
    pub classification: Vec<ClassificationEntry>,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Flags {
    pub distributive: bool,
    pub phi_is_congruence: bool,
    pub phi_is_diagonal: bool,
    pub regular: bool,
    pub simple: bool,
    pub subdirectly_irreducible: bool,
}

impl From<&StructureFlags> for Flags {
    fn from(f: &StructureFlags) -> Self {
        Flags {
            distributive: f.distributive,
            phi_is_congruence: f.phi_is_congruence,
            phi_is_diagonal: f.phi_is_diagonal,
            regular: f.regular,
            simple: f.simple,
            subdirectly_irreducible: f.subdirectly_irreducible,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CongruenceEntry {
    pub blocks: Vec<NamedSet>,
    pub cokernel: NamedSet,
}

impl CongruenceEntry {
    pub fn new(l: &BoundedLattice, c: &Congruence) -> Self {
        CongruenceEntry { blocks: c.block_names(l), cokernel: named(l, c.cokernel(l)) }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CongruencesOutput {
    pub subject: String,
    pub congruences: Vec<CongruenceEntry>,
    pub flags: Flags,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TablePair {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nabla: Option<Vec<[String; 2]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub subject: String,
    pub side: String,
    pub count: usize,
    pub dicomplementations: Vec<TablePair>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: String,
    pub kind: String,
}
