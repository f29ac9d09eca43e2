//! Ungraded Hopf quasigroups.
//!
//! A Hopf quasigroup is a unital, possibly nonassociative algebra with a
//! coassociative counital comultiplication (both algebra maps) and an
//! antipode `S` satisfying the four quasigroup antipode identities
//!
//! ```text
//! S(h₁)(h₂g) = ε(h)g = h₁(S(h₂)g)      (gh₁)S(h₂) = gε(h) = (gS(h₁))h₂
//! ```
//!
//! which replace the Hopf-algebra identity `S(h₁)h₂ = ε(h)1` when the product
//! is not associative.

use crate::algebra::UnitalAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Space};
use crate::laws;
use crate::report::{Check, Report, Witness};
use crate::tables::{validate_ip_loop, CayleyTable, LoopTable};

/// `(H, μ, η, Δ, ε, S)` by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfQuasigroup {
    algebra: UnitalAlgebra,
    comult: LinMap,
    counit: LinMap,
    antipode: LinMap,
}

impl HopfQuasigroup {
    pub fn new(algebra: UnitalAlgebra, comult: LinMap, counit: LinMap, antipode: LinMap) -> Result<Self> {
        let h = algebra.space().clone();
        let expect = |what: &str, m: &LinMap, dom: &Space, cod: &Space| -> Result<()> {
            if m.domain() != dom || m.codomain() != cod {
                return Err(Error::MalformedStructure(format!(
                    "{what} is {} ← {}, expected {cod} ← {dom}",
                    m.codomain(),
                    m.domain()
                )));
            }
            Ok(())
        };
        expect("comultiplication", &comult, &h, &h.tensor(&h))?;
        expect("counit", &counit, &h, &Space::ground())?;
        expect("antipode", &antipode, &h, &h)?;
        Ok(Self { algebra, comult, counit, antipode })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn algebra(&self) -> &UnitalAlgebra {
        &self.algebra
    }

    pub fn mult(&self) -> &LinMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinMap {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn with_algebra(&self, algebra: UnitalAlgebra) -> Result<Self> {
        Self::new(algebra, self.comult.clone(), self.counit.clone(), self.antipode.clone())
    }

    pub fn with_comult(&self, comult: LinMap) -> Result<Self> {
        Self::new(self.algebra.clone(), comult, self.counit.clone(), self.antipode.clone())
    }

    pub fn with_counit(&self, counit: LinMap) -> Result<Self> {
        Self::new(self.algebra.clone(), self.comult.clone(), counit, self.antipode.clone())
    }

    pub fn with_antipode(&self, antipode: LinMap) -> Result<Self> {
        Self::new(self.algebra.clone(), self.comult.clone(), self.counit.clone(), antipode)
    }

    /// The same structure on a freshly named copy of the underlying space.
    pub fn renamed(&self, name: &str) -> Self {
        let algebra = self.algebra.renamed(name);
        let h = algebra.space().clone();
        let hh = h.tensor(&h);
        Self {
            comult: self.comult.relabel(h.clone(), hh).expect("same dims"),
            counit: self.counit.relabel(h.clone(), Space::ground()).expect("same dims"),
            antipode: self.antipode.relabel(h.clone(), h).expect("same dims"),
            algebra,
        }
    }
}

/// Validates the coalgebra, morphism and antipode axioms of a Hopf quasigroup.
///
/// Associativity is reported but not required.
pub fn validate_hopf_quasigroup(h: &HopfQuasigroup) -> Report {
    let mut report = Report::new(format!("Hopf quasigroup of dimension {}", h.dim()));
    let field = h.field();
    let space = h.space();
    let id = h.algebra.id();
    let (mu, eta, delta, eps, s) = (h.mult(), h.unit(), &h.comult, &h.counit, &h.antipode);
    let built = "shapes fixed at construction";

    for c in h.algebra.unital_checks("HQ-alg-unit", "") {
        report.push(c);
    }

    let coassoc_l = delta.kron(&id).compose(delta).expect(built);
    let coassoc_r = id.kron(delta).compose(delta).expect(built);
    report.push(Check::maps("HQ-coassoc", "", &coassoc_l, &coassoc_r));
    let counit_l = eps.kron(&id).compose(delta).expect(built);
    let counit_r = id.kron(eps).compose(delta).expect(built);
    report.push(Check::maps("HQ-counit", "left", &counit_l, &id));
    report.push(Check::maps("HQ-counit", "right", &counit_r, &id));

    let hh_mult = laws::tensor_mult(mu, mu).expect(built);
    let lhs = delta.compose(mu).expect(built);
    let rhs = hh_mult.compose(&delta.kron(delta)).expect(built);
    report.push(Check::maps("HQ-comult-morphism", "mult", &lhs, &rhs));
    report.push(Check::maps("HQ-comult-morphism", "unit", &delta.compose(eta).expect(built), &eta.kron(eta)));
    report.push(Check::maps("HQ-counit-morphism", "mult", &eps.compose(mu).expect(built), &eps.kron(eps)));
    report.push(Check::maps(
        "HQ-counit-morphism",
        "unit",
        &eps.compose(eta).expect(built),
        &LinMap::scalar(field.one()),
    ));

    let eps_id = laws::counit_left(eps, space);
    let id_eps = laws::counit_right(eps, space);
    report.push(Check::maps("HQ-2.5a", "S(h1)(h2g)", &laws::s_first_inner_left(mu, s, delta).expect(built), &eps_id));
    report.push(Check::maps("HQ-2.5b", "h1(S(h2)g)", &laws::s_second_inner_left(mu, s, delta).expect(built), &eps_id));
    report.push(Check::maps("HQ-2.6a", "(gh1)S(h2)", &laws::s_second_outer_right(mu, s, delta).expect(built), &id_eps));
    report.push(Check::maps("HQ-2.6b", "(gS(h1))h2", &laws::s_first_outer_right(mu, s, delta).expect(built), &id_eps));

    let assoc = h.algebra.associativity_check("HQ-assoc", "");
    let associative = assoc.passed();
    report.push(assoc.informational());
    if associative {
        // An associative Hopf quasigroup is a Hopf algebra.
        let one_eps = eta.compose(eps).expect(built);
        let left = LinMap::chain(&[mu, &s.kron(&id), delta]).expect(built);
        let right = LinMap::chain(&[mu, &id.kron(s), delta]).expect(built);
        report.push(Check::maps("HQ-hopf-antipode", "S(h1)h2", &left, &one_eps));
        report.push(Check::maps("HQ-hopf-antipode", "h1S(h2)", &right, &one_eps));
    }
    report
}

/// Checks the identities satisfied by `S⁻¹` when the antipode is bijective.
pub fn antipode_inverse_laws(h: &HopfQuasigroup) -> Report {
    let mut report = Report::new(format!("inverse antipode laws, dimension {}", h.dim()));
    let s_inv = match h.antipode.invert() {
        Ok(m) => m,
        Err(e) => {
            report.push(Check::fail("HQ-S-bijective", "", Witness::Note { detail: format!("NotBijective: {e}") }));
            return report;
        }
    };
    report.push(Check::pass("HQ-S-bijective", ""));
    let built = "shapes fixed at construction";
    let space = h.space();
    let (mu, eps) = (h.mult(), &h.counit);
    let delta_op = laws::swap(h.field(), space, space).compose(&h.comult).expect(built);
    let eps_id = laws::counit_left(eps, space);
    let id_eps = laws::counit_right(eps, space);
    report.push(Check::maps(
        "HQ-2.9a",
        "S⁻¹(h2)(h1g)",
        &laws::s_first_inner_left(mu, &s_inv, &delta_op).expect(built),
        &eps_id,
    ));
    report.push(Check::maps(
        "HQ-2.9b",
        "h2(S⁻¹(h1)g)",
        &laws::s_second_inner_left(mu, &s_inv, &delta_op).expect(built),
        &eps_id,
    ));
    report.push(Check::maps(
        "HQ-2.10a",
        "(gS⁻¹(h2))h1",
        &laws::s_first_outer_right(mu, &s_inv, &delta_op).expect(built),
        &id_eps,
    ));
    report.push(Check::maps(
        "HQ-2.10b",
        "g(h2S⁻¹(h1))",
        &laws::s_second_inner_right(mu, &s_inv, &delta_op).expect(built),
        &id_eps,
    ));
    report
}

/// The loop algebra `k[L]`: `Δx = x⊗x`, `εx = 1`, `Sx = x⁻¹`.
pub fn loop_algebra(t: &LoopTable, field: Field) -> HopfQuasigroup {
    loop_algebra_unchecked(t.cayley(), field).expect("validated IP loop")
}

/// Like [`loop_algebra`] for a raw table, rejecting anything that is not an IP loop.
pub fn loop_algebra_from_table(t: &CayleyTable, field: Field) -> Result<HopfQuasigroup> {
    let report = validate_ip_loop(t);
    if let Some(bad) = report.required_failures().next() {
        return Err(Error::InvalidLoop(format!("{} fails: {:?}", bad.id, bad.witness)));
    }
    loop_algebra_unchecked(t, field)
}

/// Builds the group-like structure on any loop table without checking the inverse
/// property; `S` sends each element to its left inverse. Used to cross-check the
/// Hopf-quasigroup validator against the table validator.
pub fn loop_algebra_unchecked(t: &CayleyTable, field: Field) -> Result<HopfQuasigroup> {
    let n = t.order();
    if t.table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::InvalidLoop("table is not square or not closed".into()));
    }
    let algebra = UnitalAlgebra::of_table(field, "H", t)?;
    let h = algebra.space().clone();
    let comult = LinMap::from_basis_map(field, h.clone(), h.tensor(&h), |x| x * n + x)?;
    let counit = LinMap::from_basis_map(field, h.clone(), Space::ground(), |_| 0)?;
    let mut left_inverse = Vec::with_capacity(n);
    for x in 0..n {
        let y = (0..n)
            .find(|&y| t.table[y][x] == 0)
            .ok_or_else(|| Error::InvalidLoop(format!("element {x} has no left inverse")))?;
        left_inverse.push(y);
    }
    let antipode = LinMap::from_basis_map(field, h.clone(), h, |x| left_inverse[x])?;
    HopfQuasigroup::new(algebra, comult, counit, antipode)
}
