//! Weak complementations, dual weak complementations and their derived operations.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{BoundedLattice, LatticeError, LatticeSpec};
use crate::laws::{witness, LawReport};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `x^ΔΔ <= x`
    DeltaDoubleBelow,
    DeltaAntitone,
    /// `(x∧y) ∨ (x∧y^Δ) = x`
    DeltaSplit,
    /// `x <= x^∇∇`
    NablaDoubleAbove,
    NablaAntitone,
    /// `(x∨y) ∧ (x∨y^∇) = x`
    NablaSplit,
    /// `x^∇ <= x^Δ`
    NablaBelowDelta,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::DeltaDoubleBelow,
        Axiom::DeltaAntitone,
        Axiom::DeltaSplit,
        Axiom::NablaDoubleAbove,
        Axiom::NablaAntitone,
        Axiom::NablaSplit,
        Axiom::NablaBelowDelta,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::DeltaDoubleBelow => "axiom.delta-double-below",
            Axiom::DeltaAntitone => "axiom.delta-antitone",
            Axiom::DeltaSplit => "axiom.delta-split",
            Axiom::NablaDoubleAbove => "axiom.nabla-double-above",
            Axiom::NablaAntitone => "axiom.nabla-antitone",
            Axiom::NablaSplit => "axiom.nabla-split",
            Axiom::NablaBelowDelta => "axiom.nabla-below-delta",
        }
    }

    fn needs(self) -> (bool, bool) {
        match self {
            Axiom::DeltaDoubleBelow | Axiom::DeltaAntitone | Axiom::DeltaSplit => (true, false),
            Axiom::NablaDoubleAbove | Axiom::NablaAntitone | Axiom::NablaSplit => (false, true),
            Axiom::NablaBelowDelta => (true, true),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unary {
    Delta,
    Nabla,
}

impl Unary {
    pub fn as_str(self) -> &'static str {
        match self {
            Unary::Delta => "delta",
            Unary::Nabla => "nabla",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DicomplementError {
    Lattice(LatticeError),
    /// Neither table was supplied.
    NoUnary,
    /// A table is not a total function on the carrier.
    NotTotal {
        table: Unary,
        element: String,
    },
    /// The first falsifying instance, as element names in quantifier order.
    AxiomViolation {
        axiom: Axiom,
        witness: Vec<String>,
    },
    MissingUnary(Unary),
    NotBoolean {
        element: String,
    },
    OrtholawViolation {
        law: String,
        witness: Vec<String>,
    },
    SizeCapExceeded {
        size: usize,
        cap: usize,
    },
}

impl fmt::Display for DicomplementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DicomplementError::Lattice(e) => write!(f, "{e}"),
            DicomplementError::NoUnary => write!(f, "no unary table given"),
            DicomplementError::NotTotal { table, element } => {
                write!(f, "{} table is not total at `{element}`", table.as_str())
            }
            DicomplementError::AxiomViolation { axiom, witness } => {
                write!(f, "{axiom} violated at ({})", witness.join(", "))
            }
            DicomplementError::MissingUnary(u) => write!(f, "operation needs the {} table", u.as_str()),
            DicomplementError::NotBoolean { element } => write!(f, "not Boolean: `{element}` has no unique complement"),
            DicomplementError::OrtholawViolation { law, witness } => {
                write!(f, "ortholattice law {law} violated at ({})", witness.join(", "))
            }
            DicomplementError::SizeCapExceeded { size, cap } => write!(f, "size {size} exceeds cap {cap}"),
        }
    }
}

impl core::error::Error for DicomplementError {}

impl From<LatticeError> for DicomplementError {
    fn from(e: LatticeError) -> Self {
        DicomplementError::Lattice(e)
    }
}

/// A bounded lattice with a validated Δ table, ∇ table, or both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dicomplementation {
    lattice: BoundedLattice,
    delta: Option<Vec<usize>>,
    nabla: Option<Vec<usize>>,
}

/// The WCL reduct: Δ with its derived operations.
#[derive(Clone, Copy, Debug)]
pub struct Wcl<'a> {
    lattice: &'a BoundedLattice,
    delta: &'a [usize],
}

/// The dual WCL reduct: ∇ with its derived operations.
#[derive(Clone, Copy, Debug)]
pub struct DualWcl<'a> {
    lattice: &'a BoundedLattice,
    nabla: &'a [usize],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `S(L)`: fixed points of `x^∇∇`, with `∧`, `⊔`, `∇`.
    Closed,
    /// `S̄(L)`: fixed points of `x^ΔΔ`, with `⊓̄`, `∨`, `Δ`.
    Interior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplementSide {
    Delta,
    Nabla,
    Both,
}

impl Dicomplementation {
    /// Validates the tables against every axiom. Scans run axiom by axiom in
    /// [`Axiom::ALL`] order, each over elements in index order (x outermost).
    pub fn attach(
        lattice: BoundedLattice,
        delta: Option<Vec<usize>>,
        nabla: Option<Vec<usize>>,
    ) -> Result<Self, DicomplementError> {
        if delta.is_none() && nabla.is_none() {
            return Err(DicomplementError::NoUnary);
        }
        for (table, u) in [(&delta, Unary::Delta), (&nabla, Unary::Nabla)] {
            if let Some(t) = table {
                check_total(&lattice, t, u)?;
            }
        }
        for axiom in Axiom::ALL {
            if let Some(w) = axiom_witness(&lattice, delta.as_deref(), nabla.as_deref(), axiom) {
                let witness = w.iter().map(|&x| lattice.name(x).to_string()).collect();
                return Err(DicomplementError::AxiomViolation { axiom, witness });
            }
        }
        Ok(Dicomplementation { lattice, delta, nabla })
    }

    /// Builds the lattice and attaches whatever tables the spec carries.
    pub fn from_spec(spec: &LatticeSpec, cap: usize) -> Result<Self, DicomplementError> {
        let lattice = BoundedLattice::from_spec(spec, cap)?;
        let (delta, nabla) = tables_from_spec(&lattice, spec)?;
        Self::attach(lattice, delta, nabla)
    }

    /// Tables given by element names, `(input, output)`.
    pub fn from_named(
        lattice: BoundedLattice,
        delta: Option<&[(&str, &str)]>,
        nabla: Option<&[(&str, &str)]>,
    ) -> Result<Self, DicomplementError> {
        let conv = |t: &[(&str, &str)], u| {
            let owned: Vec<(String, String)> = t.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
            table_from_pairs(&lattice, &owned, u)
        };
        let delta = delta.map(|t| conv(t, Unary::Delta)).transpose()?;
        let nabla = nabla.map(|t| conv(t, Unary::Nabla)).transpose()?;
        Self::attach(lattice, delta, nabla)
    }

    /// `a^Δ = 1` for `a != 1`, `1^Δ = 0`; `a^∇ = 0` for `a != 0`, `0^∇ = 1`.
    pub fn trivial(lattice: BoundedLattice) -> Self {
        let (b, t) = (lattice.bottom(), lattice.top());
        let delta = lattice.elements().map(|x| if x == t { b } else { t }).collect();
        let nabla = lattice.elements().map(|x| if x == b { t } else { b }).collect();
        Self::attach(lattice, Some(delta), Some(nabla)).expect("trivial dicomplementation satisfies the axioms")
    }

    /// Both tables equal to the complement. Fails unless every element has a
    /// unique complement (complemented and distributive).
    pub fn boolean(lattice: BoundedLattice) -> Result<Self, DicomplementError> {
        let mut comp = Vec::with_capacity(lattice.len());
        for x in lattice.elements() {
            let cs = lattice.complements(x);
            if cs.len() != 1 {
                return Err(DicomplementError::NotBoolean { element: lattice.name(x).to_string() });
            }
            comp.push(cs.first().expect("one complement"));
        }
        if let Some((x, _, _)) = lattice.distributivity_counterexample() {
            return Err(DicomplementError::NotBoolean { element: lattice.name(x).to_string() });
        }
        Self::attach(lattice, Some(comp.clone()), Some(comp))
    }

    /// `L^n` with tables applied coordinatewise.
    pub fn power(&self, n: usize, cap: usize) -> Result<Self, DicomplementError> {
        let lattice = self.lattice.direct_power(n, cap)?;
        let m = self.lattice.len();
        let lift = |t: &Vec<usize>| -> Vec<usize> {
            lattice
                .elements()
                .map(|i| self.lattice.power_coordinates(i, n).iter().fold(0, |acc, &c| acc * m + t[c]))
                .collect()
        };
        let delta = self.delta.as_ref().map(lift);
        let nabla = self.nabla.as_ref().map(lift);
        Self::attach(lattice, delta, nabla)
    }

    /// Skips validation; callers guarantee the axioms.
    pub(crate) fn from_parts_unchecked(
        lattice: BoundedLattice,
        delta: Option<Vec<usize>>,
        nabla: Option<Vec<usize>>,
    ) -> Self {
        Dicomplementation { lattice, delta, nabla }
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    pub fn has_delta(&self) -> bool {
        self.delta.is_some()
    }

    pub fn has_nabla(&self) -> bool {
        self.nabla.is_some()
    }

    pub fn delta_table(&self) -> Result<&[usize], DicomplementError> {
        self.delta.as_deref().ok_or(DicomplementError::MissingUnary(Unary::Delta))
    }

    pub fn nabla_table(&self) -> Result<&[usize], DicomplementError> {
        self.nabla.as_deref().ok_or(DicomplementError::MissingUnary(Unary::Nabla))
    }

    pub fn wcl(&self) -> Result<Wcl<'_>, DicomplementError> {
        Ok(Wcl { lattice: &self.lattice, delta: self.delta_table()? })
    }

    pub fn dual_wcl(&self) -> Result<DualWcl<'_>, DicomplementError> {
        Ok(DualWcl { lattice: &self.lattice, nabla: self.nabla_table()? })
    }

    /// The Δ-only reduct.
    pub fn delta_reduct(&self) -> Result<Self, DicomplementError> {
        Ok(Self::from_parts_unchecked(self.lattice.clone(), Some(self.delta_table()?.to_vec()), None))
    }

    /// The ∇-only reduct.
    pub fn nabla_reduct(&self) -> Result<Self, DicomplementError> {
        Ok(Self::from_parts_unchecked(self.lattice.clone(), None, Some(self.nabla_table()?.to_vec())))
    }

    /// `(x^∇ ∧ y^∇)^∇`
    pub fn sqcup(&self, x: usize, y: usize) -> Result<usize, DicomplementError> {
        Ok(self.dual_wcl()?.sqcup(x, y))
    }

    /// `(x^Δ ∨ y^Δ)^Δ`
    pub fn sqcap_bar(&self, x: usize, y: usize) -> Result<usize, DicomplementError> {
        Ok(self.wcl()?.sqcap_bar(x, y))
    }

    /// `(x ∨ y)^ΔΔ`
    pub fn under_sqcup(&self, x: usize, y: usize) -> Result<usize, DicomplementError> {
        Ok(self.wcl()?.under_sqcup(x, y))
    }

    pub fn skeleton(&self) -> Result<ElementSet, DicomplementError> {
        Ok(self.dual_wcl()?.skeleton())
    }

    pub fn dual_skeleton(&self) -> Result<ElementSet, DicomplementError> {
        Ok(self.wcl()?.skeleton())
    }

    /// `D(L) = {x | x^∇ = 0}`
    pub fn dense_set(&self) -> Result<ElementSet, DicomplementError> {
        let n = self.nabla_table()?;
        Ok(self.lattice.elements().filter(|&x| n[x] == self.lattice.bottom()).collect())
    }

    /// `D̄(L) = {x | x^Δ = 1}`
    pub fn codense_set(&self) -> Result<ElementSet, DicomplementError> {
        let d = self.delta_table()?;
        Ok(self.lattice.elements().filter(|&x| d[x] == self.lattice.top()).collect())
    }

    pub fn dense_sets(&self) -> Result<(ElementSet, ElementSet), DicomplementError> {
        Ok((self.dense_set()?, self.codense_set()?))
    }

    /// Nearlattice laws for `D(L)` (ids `dense.*`) and `D̄(L)` (ids
    /// `codense.*`); a side whose table is missing is skipped.
    pub fn nearlattice_check(&self) -> LawReport {
        let mut r = LawReport::new();
        match self.dense_set() {
            Ok(d) => r.extend_prefixed("dense.", nearlattice_laws(&self.lattice, d)),
            Err(_) => r.skip("dense", "needs the nabla table"),
        }
        match self.codense_set() {
            Ok(d) => r.extend_prefixed("codense.", nearlattice_laws(&self.lattice.dual(), d)),
            Err(_) => r.skip("codense", "needs the delta table"),
        }
        r
    }

    /// Reverses the order; Δ and ∇ trade places.
    pub fn dual(&self) -> Self {
        Self::from_parts_unchecked(self.lattice.dual(), self.nabla.clone(), self.delta.clone())
    }
}

impl<'a> Wcl<'a> {
    pub fn lattice(&self) -> &'a BoundedLattice {
        self.lattice
    }

    pub fn table(&self) -> &'a [usize] {
        self.delta
    }

    #[inline]
    pub fn delta(&self, x: usize) -> usize {
        self.delta[x]
    }

    /// `x^ΔΔ`, an interior operator.
    #[inline]
    pub fn interior(&self, x: usize) -> usize {
        self.delta[self.delta[x]]
    }

    pub fn sqcap_bar(&self, x: usize, y: usize) -> usize {
        self.delta[self.lattice.join(self.delta[x], self.delta[y])]
    }

    pub fn under_sqcup(&self, x: usize, y: usize) -> usize {
        self.interior(self.lattice.join(x, y))
    }

    /// `S̄(L)`
    pub fn skeleton(&self) -> ElementSet {
        self.lattice.elements().filter(|&x| self.interior(x) == x).collect()
    }
}

impl<'a> DualWcl<'a> {
    pub fn lattice(&self) -> &'a BoundedLattice {
        self.lattice
    }

    pub fn table(&self) -> &'a [usize] {
        self.nabla
    }

    #[inline]
    pub fn nabla(&self, x: usize) -> usize {
        self.nabla[x]
    }

    /// `x^∇∇`, a closure operator.
    #[inline]
    pub fn closure(&self, x: usize) -> usize {
        self.nabla[self.nabla[x]]
    }

    pub fn sqcup(&self, x: usize, y: usize) -> usize {
        self.nabla[self.lattice.meet(self.nabla[x], self.nabla[y])]
    }

    /// `S(L)`
    pub fn skeleton(&self) -> ElementSet {
        self.lattice.elements().filter(|&x| self.closure(x) == x).collect()
    }
}

fn check_total(lattice: &BoundedLattice, table: &[usize], u: Unary) -> Result<(), DicomplementError> {
    let n = lattice.len();
    if table.len() != n {
        let element = if table.len() < n { lattice.name(table.len()).to_string() } else { table.len().to_string() };
        return Err(DicomplementError::NotTotal { table: u, element });
    }
    if let Some(x) = (0..n).find(|&x| table[x] >= n) {
        return Err(DicomplementError::NotTotal { table: u, element: lattice.name(x).to_string() });
    }
    Ok(())
}

fn table_from_pairs(
    lattice: &BoundedLattice,
    pairs: &[(String, String)],
    u: Unary,
) -> Result<Vec<usize>, DicomplementError> {
    let mut table = vec![usize::MAX; lattice.len()];
    for (a, b) in pairs {
        let x = lattice.element(a)?;
        let y = lattice.element(b)?;
        if table[x] != usize::MAX {
            return Err(DicomplementError::NotTotal { table: u, element: a.clone() });
        }
        table[x] = y;
    }
    if let Some(x) = table.iter().position(|&y| y == usize::MAX) {
        return Err(DicomplementError::NotTotal { table: u, element: lattice.name(x).to_string() });
    }
    Ok(table)
}

/// Optional `Δ` and `∇` index tables.
pub type RawTables = (Option<Vec<usize>>, Option<Vec<usize>>);

/// The rows of `spec` as index tables over `lattice`, checked for totality
/// only. Useful for reporting axioms on tables that `attach` would reject.
pub fn tables_from_spec(lattice: &BoundedLattice, spec: &LatticeSpec) -> Result<RawTables, DicomplementError> {
    let delta = spec.delta.as_deref().map(|t| table_from_pairs(lattice, t, Unary::Delta)).transpose()?;
    let nabla = spec.nabla.as_deref().map(|t| table_from_pairs(lattice, t, Unary::Nabla)).transpose()?;
    Ok((delta, nabla))
}

/// The first falsifying tuple for `axiom`, or `None` if it holds or its
/// tables are absent.
pub(crate) fn axiom_witness(
    l: &BoundedLattice,
    delta: Option<&[usize]>,
    nabla: Option<&[usize]>,
    axiom: Axiom,
) -> Option<Vec<usize>> {
    let n = l.len();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let antitone = |t: &[usize]| pairs().find(|&(x, y)| l.leq(x, y) && !l.leq(t[y], t[x])).map(|(x, y)| vec![x, y]);
    match (axiom, delta, nabla) {
        (Axiom::DeltaDoubleBelow, Some(d), _) => (0..n).find(|&x| !l.leq(d[d[x]], x)).map(|x| vec![x]),
        (Axiom::DeltaAntitone, Some(d), _) => antitone(d),
        (Axiom::DeltaSplit, Some(d), _) => {
            pairs().find(|&(x, y)| l.join(l.meet(x, y), l.meet(x, d[y])) != x).map(|(x, y)| vec![x, y])
        }
        (Axiom::NablaDoubleAbove, _, Some(m)) => (0..n).find(|&x| !l.leq(x, m[m[x]])).map(|x| vec![x]),
        (Axiom::NablaAntitone, _, Some(m)) => antitone(m),
        (Axiom::NablaSplit, _, Some(m)) => {
            pairs().find(|&(x, y)| l.meet(l.join(x, y), l.join(x, m[y])) != x).map(|(x, y)| vec![x, y])
        }
        (Axiom::NablaBelowDelta, Some(d), Some(m)) => (0..n).find(|&x| !l.leq(m[x], d[x])).map(|x| vec![x]),
        _ => None,
    }
}

/// Every axiom as a law; axioms whose tables are absent are skipped.
pub fn axiom_report(l: &BoundedLattice, delta: Option<&[usize]>, nabla: Option<&[usize]>) -> LawReport {
    let mut r = LawReport::new();
    for axiom in Axiom::ALL {
        let (nd, nn) = axiom.needs();
        if (nd && delta.is_none()) || (nn && nabla.is_none()) {
            r.skip(axiom.id(), "table absent");
            continue;
        }
        let w = axiom_witness(l, delta, nabla, axiom);
        r.check(axiom.id(), w.map(|w| w.iter().map(|&x| l.name(x).to_string()).collect()));
    }
    r
}

/// Laws of a nearlattice carried by an up-closed set `d` of `l`.
fn nearlattice_laws(l: &BoundedLattice, d: ElementSet) -> LawReport {
    let mut r = LawReport::new();
    let name = |x: usize| l.name(x).to_string();
    r.check("contains-top", (!d.contains(l.top())).then(|| witness!(l.name(l.top()))));
    let not_up = d.iter().flat_map(|x| l.up(x).difference(d).iter().map(move |y| (x, y))).next();
    r.check("up-closed", not_up.map(|(x, y)| vec![name(x), name(y)]));
    let not_join = d.iter().flat_map(|x| d.iter().map(move |y| (x, y))).find(|&(x, y)| !d.contains(l.join(x, y)));
    r.check("join-closed", not_join.map(|(x, y)| vec![name(x), name(y)]));
    // [a) ⊆ D is a sublattice of L, so bounded lattice with a as bottom.
    let bad_interval = d.iter().find(|&a| {
        let up = l.up(a);
        !up.is_subset(d) || up.iter().any(|x| up.iter().any(|y| !up.contains(l.meet(x, y))))
    });
    r.check("principal-up-sets-bounded", bad_interval.map(|a| vec![name(a)]));
    let least = d.iter().find(|&x| d.iter().all(|y| l.leq(x, y)));
    let is_filter = d.iter().all(|x| d.iter().all(|y| d.contains(l.meet(x, y))));
    r.check(
        "least-element-implies-filter",
        (least.is_some() && !is_filter).then(|| vec![name(least.expect("checked"))]),
    );
    r
}

/// Every table on `lattice` satisfying the axioms of `side`, in lexicographic
/// order of the Δ table, then the ∇ table.
pub fn enumerate(
    lattice: &BoundedLattice,
    side: ComplementSide,
    cap: usize,
) -> Result<Vec<Dicomplementation>, DicomplementError> {
    if lattice.len() > cap {
        return Err(DicomplementError::SizeCapExceeded { size: lattice.len(), cap });
    }
    let deltas = || search(lattice, false);
    let nablas = || search(lattice, true);
    let out = match side {
        ComplementSide::Delta => deltas()
            .into_iter()
            .map(|d| Dicomplementation::from_parts_unchecked(lattice.clone(), Some(d), None))
            .collect(),
        ComplementSide::Nabla => nablas()
            .into_iter()
            .map(|m| Dicomplementation::from_parts_unchecked(lattice.clone(), None, Some(m)))
            .collect(),
        ComplementSide::Both => {
            let ms = nablas();
            let mut out = Vec::new();
            for d in deltas() {
                for m in &ms {
                    if lattice.elements().all(|x| lattice.leq(m[x], d[x])) {
                        out.push(Dicomplementation::from_parts_unchecked(
                            lattice.clone(),
                            Some(d.clone()),
                            Some(m.clone()),
                        ));
                    }
                }
            }
            out
        }
    };
    Ok(out)
}

/// Depth-first table search. For `dual`, the order is read upside down
/// (searching ∇ is searching Δ on the dual lattice).
fn search(l: &BoundedLattice, dual: bool) -> Vec<Vec<usize>> {
    let leq = |a: usize, b: usize| if dual { l.leq(b, a) } else { l.leq(a, b) };
    let n = l.len();
    let mut table = vec![usize::MAX; n];
    let mut out = Vec::new();
    fn rec(
        x: usize,
        n: usize,
        table: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        leq: &dyn Fn(usize, usize) -> bool,
        full: &dyn Fn(&[usize]) -> bool,
    ) {
        if x == n {
            if full(table) {
                out.push(table.clone());
            }
            return;
        }
        for v in 0..n {
            let antitone_ok = (0..x).all(|p| (!leq(p, x) || leq(v, table[p])) && (!leq(x, p) || leq(table[p], v)));
            if !antitone_ok {
                continue;
            }
            table[x] = v;
            // x^ΔΔ <= x wherever both steps are already assigned.
            let double_ok = (0..=x).all(|p| {
                let q = table[p];
                q > x || leq(table[q], p)
            });
            if double_ok {
                rec(x + 1, n, table, out, leq, full);
            }
            table[x] = usize::MAX;
        }
    }
    let full = |t: &[usize]| {
        if dual {
            axiom_witness(l, None, Some(t), Axiom::NablaSplit).is_none()
        } else {
            axiom_witness(l, Some(t), None, Axiom::DeltaSplit).is_none()
        }
    };
    rec(0, n, &mut table, &mut out, &leq, &full);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn golden_instances_validate() {
        let l6 = instances::l6();
        let d = l6.wcl().unwrap();
        let l = l6.lattice();
        let e = |s| l.index_of(s).unwrap();
        assert_eq!(d.sqcap_bar(e("a"), e("b")), e("0"));
        assert_eq!(d.interior(e("a")), e("u"));
        assert_eq!(l.render(l6.dual_skeleton().unwrap()), "{0,u,b,1}");
        assert_eq!(l.render(l6.dense_set().unwrap()), "{a,b,1}");
        assert_eq!(l.render(l6.codense_set().unwrap()), "{0,v}");

        let l7 = instances::l7();
        let l = l7.lattice();
        let e = |s| l.index_of(s).unwrap();
        assert_eq!(l7.sqcap_bar(e("a"), e("b")).unwrap(), e("0"));
        assert_eq!(l.render(l7.dual_skeleton().unwrap()), "{0,a,b,1}");
    }

    #[test]
    fn constant_top_delta_trips_double_below_at_bottom() {
        let l = instances::l6().lattice().clone();
        let top = l.top();
        let err = Dicomplementation::attach(l, Some(vec![top; 6]), None).unwrap_err();
        assert_eq!(
            err,
            DicomplementError::AxiomViolation { axiom: Axiom::DeltaDoubleBelow, witness: vec!["0".into()] }
        );
    }

    #[test]
    fn constant_top_delta_fails_only_double_below() {
        let l = instances::l6().lattice().clone();
        let t = vec![l.top(); 6];
        let r = axiom_report(&l, Some(&t), None);
        let failing: Vec<&str> = r.failures().map(|f| f.id.as_str()).collect();
        assert_eq!(failing, ["axiom.delta-double-below"]);
    }

    #[test]
    fn trivial_tables() {
        let c2 = BoundedLattice::chain(2).unwrap();
        let t = Dicomplementation::trivial(c2);
        assert_eq!(t.delta_table().unwrap(), &[1, 0]);
        assert_eq!(t.nabla_table().unwrap(), &[1, 0]);

        let one = Dicomplementation::trivial(BoundedLattice::chain(1).unwrap());
        assert_eq!(one.delta_table().unwrap(), &[0]);

        let t6 = Dicomplementation::trivial(instances::l6().lattice().clone());
        let l = t6.lattice();
        assert_eq!(t6.delta_table().unwrap()[l.index_of("u").unwrap()], l.top());
        assert_ne!(&t6, &instances::l6());
        let (d, dbar) = t6.dense_sets().unwrap();
        assert_eq!(d, l.carrier().difference(ElementSet::singleton(l.bottom())));
        assert_eq!(dbar, l.carrier().difference(ElementSet::singleton(l.top())));
    }

    #[test]
    fn boolean_complements() {
        let b4 = BoundedLattice::boolean(2, 64).unwrap();
        let d = Dicomplementation::boolean(b4).unwrap();
        let l = d.lattice();
        let a = l.index_of("(0,1)").unwrap();
        let b = l.index_of("(1,0)").unwrap();
        assert_eq!(d.delta_table().unwrap()[a], b);
        assert_eq!(d.nabla_table().unwrap()[b], a);
        assert_eq!(d.dual_skeleton().unwrap(), l.carrier());
        assert_eq!(d.skeleton().unwrap(), l.carrier());

        let b8 = Dicomplementation::boolean(BoundedLattice::boolean(3, 64).unwrap()).unwrap();
        let base = BoundedLattice::chain(2).unwrap();
        for x in b8.lattice().elements() {
            let flipped: Vec<usize> = base.power_coordinates(x, 3).iter().map(|&c| 1 - c).collect();
            let y = b8.delta_table().unwrap()[x];
            assert_eq!(base.power_coordinates(y, 3), flipped);
        }
        // B8 built by power equals B8 built by complement search.
        let b2 = Dicomplementation::boolean(BoundedLattice::chain(2).unwrap()).unwrap();
        assert_eq!(b2.power(3, 64).unwrap(), b8);

        let err = Dicomplementation::boolean(instances::l6().lattice().clone()).unwrap_err();
        assert_eq!(err, DicomplementError::NotBoolean { element: "v".into() });
        let l6 = instances::l6();
        assert!(l6.lattice().complements(l6.lattice().index_of("a").unwrap()).is_empty());
    }

    #[test]
    fn missing_tables() {
        let w = instances::l6().delta_reduct().unwrap();
        assert_eq!(w.sqcup(0, 1), Err(DicomplementError::MissingUnary(Unary::Nabla)));
        assert_eq!(w.skeleton(), Err(DicomplementError::MissingUnary(Unary::Nabla)));
        assert!(w.sqcap_bar(0, 1).is_ok());
        let r = w.nearlattice_check();
        assert_eq!(r.status("dense"), Some(crate::laws::Status::Skipped));
        let l = BoundedLattice::chain(2).unwrap();
        assert_eq!(Dicomplementation::attach(l, None, None), Err(DicomplementError::NoUnary));
    }

    #[test]
    fn nearlattice_on_golden() {
        for d in [instances::l6(), instances::l7()] {
            let r = d.nearlattice_check();
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let c1 = BoundedLattice::chain(1).unwrap();
        assert_eq!(enumerate(&c1, ComplementSide::Delta, 6).unwrap().len(), 1);
        let c2 = BoundedLattice::chain(2).unwrap();
        let ds = enumerate(&c2, ComplementSide::Delta, 6).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].delta_table().unwrap(), &[1, 0]);

        let l6 = instances::l6();
        let all = enumerate(l6.lattice(), ComplementSide::Delta, 6).unwrap();
        let tables: Vec<&[usize]> = all.iter().map(|d| d.delta_table().unwrap()).collect();
        assert!(tables.contains(&l6.delta_table().unwrap()));
        let triv = Dicomplementation::trivial(l6.lattice().clone());
        assert!(tables.contains(&triv.delta_table().unwrap()));
        assert!(tables.windows(2).all(|w| w[0] < w[1]));

        let err = enumerate(instances::l7().lattice(), ComplementSide::Delta, 6).unwrap_err();
        assert_eq!(err, DicomplementError::SizeCapExceeded { size: 7, cap: 6 });
    }

    #[test]
    fn enumeration_agrees_with_brute_force() {
        // Oracle: every function n^n, filtered by attach.
        for n in 1..=5 {
            for l in crate::lattice::small_lattices(n) {
                let brute: Vec<Vec<usize>> = (0..n.pow(n as u32))
                    .map(|mut k| {
                        let mut t = vec![0; n];
                        for slot in t.iter_mut().rev() {
                            *slot = k % n;
                            k /= n;
                        }
                        t
                    })
                    .filter(|t| Dicomplementation::attach(l.clone(), Some(t.clone()), None).is_ok())
                    .collect();
                let fast: Vec<Vec<usize>> = enumerate(&l, ComplementSide::Delta, 6)
                    .unwrap()
                    .iter()
                    .map(|d| d.delta_table().unwrap().to_vec())
                    .collect();
                assert_eq!(fast, brute, "lattice {:?}", l.names());
                let nablas = enumerate(&l, ComplementSide::Nabla, 6).unwrap();
                for d in nablas {
                    assert!(Dicomplementation::attach(l.clone(), None, Some(d.nabla_table().unwrap().to_vec())).is_ok());
                }
            }
        }
    }

    #[test]
    fn dual_swaps_tables() {
        let l7 = instances::l7();
        let d = l7.dual();
        assert_eq!(d.delta_table().unwrap(), l7.nabla_table().unwrap());
        assert!(Dicomplementation::attach(
            d.lattice().clone(),
            Some(d.delta_table().unwrap().to_vec()),
            Some(d.nabla_table().unwrap().to_vec())
        )
        .is_ok());
        assert_eq!(d.dual(), l7);
    }
}
