//! Crossed group-cograded Hopf quasigroups.
//!
//! A family `(H_p)_{p∈G}` of unital algebras with comultiplications
//! `Δ_{p,q}: H_{pq} → H_p⊗H_q`, a counit on `H_e`, antipodes
//! `S_p: H_p → H_{p⁻¹}` and a crossing `π_p: H_q → H_{pqp⁻¹}`. Products of
//! elements from different components are zero, which the representation
//! expresses by simply having no cross-component multiplication.

mod construct;

pub use construct::{from_hopf_quasigroup, mirror, power_construction, HopfAction};

use crate::algebra::{suffix, UnitalAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Space};
use crate::laws;
use crate::report::{Check, Report, Witness};
use crate::tables::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedGchq {
    group: GroupTable,
    components: Vec<UnitalAlgebra>,
    /// `Δ_{p,q}` at `p·n + q`.
    comult: Vec<LinMap>,
    counit: LinMap,
    antipode: Vec<LinMap>,
    /// `π_p|_{H_q}` at `p·n + q`.
    crossing: Vec<LinMap>,
}

/// The conventional atom name of component `p`.
pub fn component_name(group: &GroupTable, p: usize) -> String {
    format!("H_{}", group.label(p))
}

fn expect_shape(what: String, m: &LinMap, dom: &Space, cod: &Space) -> Result<()> {
    if m.domain() != dom || m.codomain() != cod {
        return Err(Error::MalformedStructure(format!(
            "{what} is {} ← {}, expected {cod} ← {dom}",
            m.codomain(),
            m.domain()
        )));
    }
    Ok(())
}

impl CrossedGchq {
    pub fn new(
        group: GroupTable,
        components: Vec<UnitalAlgebra>,
        comult: Vec<LinMap>,
        counit: LinMap,
        antipode: Vec<LinMap>,
        crossing: Vec<LinMap>,
    ) -> Result<Self> {
        let n = group.order();
        if components.len() != n || comult.len() != n * n || antipode.len() != n || crossing.len() != n * n {
            return Err(Error::MalformedStructure(format!(
                "expected {n} components and antipodes, {} comultiplications and crossings",
                n * n
            )));
        }
        let field = components[0].field();
        if components.iter().any(|c| c.field() != field)
            || comult.iter().chain(&antipode).chain(&crossing).any(|m| m.field() != field)
            || counit.field() != field
        {
            return Err(Error::MalformedStructure("maps over different fields".into()));
        }
        let sp = |p: usize| components[p].space();
        for p in 0..n {
            for q in 0..n {
                expect_shape(
                    format!("Δ_{{{p},{q}}}"),
                    &comult[p * n + q],
                    sp(group.mul(p, q)),
                    &sp(p).tensor(sp(q)),
                )?;
                expect_shape(format!("π_{p}|H_{q}"), &crossing[p * n + q], sp(q), sp(group.conj(p, q)))?;
            }
            expect_shape(format!("S_{p}"), &antipode[p], sp(p), sp(group.inv(p)))?;
        }
        expect_shape("ε".into(), &counit, sp(group.identity()), &Space::ground())?;
        Ok(Self { group, components, comult, counit, antipode, crossing })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn field(&self) -> Field {
        self.counit.field()
    }

    pub fn component(&self, p: usize) -> &UnitalAlgebra {
        &self.components[p]
    }

    pub fn components(&self) -> &[UnitalAlgebra] {
        &self.components
    }

    pub fn space(&self, p: usize) -> &Space {
        self.components[p].space()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.components[p].dim()
    }

    pub fn mult(&self, p: usize) -> &LinMap {
        self.components[p].mult()
    }

    pub fn unit(&self, p: usize) -> &LinMap {
        self.components[p].unit()
    }

    pub fn id(&self, p: usize) -> LinMap {
        self.components[p].id()
    }

    /// `Δ_{p,q}: H_{pq} → H_p ⊗ H_q`.
    pub fn comult(&self, p: usize, q: usize) -> &LinMap {
        &self.comult[p * self.order() + q]
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// `S_p: H_p → H_{p⁻¹}`.
    pub fn antipode(&self, p: usize) -> &LinMap {
        &self.antipode[p]
    }

    /// `π_p|_{H_q}: H_q → H_{pqp⁻¹}`.
    pub fn crossing(&self, p: usize, q: usize) -> &LinMap {
        &self.crossing[p * self.order() + q]
    }

    fn rebuild(&self) -> Result<Self> {
        Self::new(
            self.group.clone(),
            self.components.clone(),
            self.comult.clone(),
            self.counit.clone(),
            self.antipode.clone(),
            self.crossing.clone(),
        )
    }

    pub fn with_component(&self, p: usize, algebra: UnitalAlgebra) -> Result<Self> {
        let mut out = self.clone();
        *out.components.get_mut(p).ok_or(Error::IndexError { what: "grade", index: p, size: self.order() })? =
            algebra;
        out.rebuild()
    }

    pub fn with_comult(&self, p: usize, q: usize, m: LinMap) -> Result<Self> {
        self.check_grade(p)?;
        self.check_grade(q)?;
        let mut out = self.clone();
        out.comult[p * self.order() + q] = m;
        out.rebuild()
    }

    pub fn with_counit(&self, m: LinMap) -> Result<Self> {
        let mut out = self.clone();
        out.counit = m;
        out.rebuild()
    }

    pub fn with_antipode(&self, p: usize, m: LinMap) -> Result<Self> {
        self.check_grade(p)?;
        let mut out = self.clone();
        out.antipode[p] = m;
        out.rebuild()
    }

    pub fn with_crossing(&self, p: usize, q: usize, m: LinMap) -> Result<Self> {
        self.check_grade(p)?;
        self.check_grade(q)?;
        let mut out = self.clone();
        out.crossing[p * self.order() + q] = m;
        out.rebuild()
    }

    pub fn check_grade(&self, p: usize) -> Result<()> {
        if p >= self.order() {
            return Err(Error::IndexError { what: "grade", index: p, size: self.order() });
        }
        Ok(())
    }

    /// True when every component is associative, i.e. the structure is a
    /// crossed Hopf group-coalgebra.
    pub fn is_associative(&self) -> bool {
        self.components.iter().all(|c| c.associativity_check("", "").passed())
    }

    pub(crate) fn grade_instance(&self, parts: &[(&str, usize)]) -> String {
        parts
            .iter()
            .map(|(k, v)| format!("{k}={}", self.group.label(*v)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GchqOptions {
    /// Treat a non-invertible antipode as a failure rather than a warning.
    pub require_invertible_antipode: bool,
}

impl Default for GchqOptions {
    fn default() -> Self {
        Self { require_invertible_antipode: true }
    }
}

const BUILT: &str = "shapes fixed at construction";

/// Checks the group-cograded Hopf quasigroup axioms for every grade tuple.
pub fn validate_gchq(h: &CrossedGchq) -> Report {
    validate_gchq_with(h, GchqOptions::default())
}

pub fn validate_gchq_with(h: &CrossedGchq, opts: GchqOptions) -> Report {
    let g = &h.group;
    let n = g.order();
    let e = g.identity();
    let mut report = Report::new(format!("crossed group-cograded Hopf quasigroup over a group of order {n}"));

    for p in 0..n {
        let inst = h.grade_instance(&[("p", p)]);
        report.extend_checks(h.component(p).unital_checks("GHQ-unital", &inst));
        report.push(h.component(p).associativity_check("GHQ-assoc", &inst).informational());
    }

    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let lhs = h.comult(p, q).kron(&h.id(r)).compose(h.comult(g.mul(p, q), r)).expect(BUILT);
                let rhs = h.id(p).kron(h.comult(q, r)).compose(h.comult(p, g.mul(q, r))).expect(BUILT);
                report.push(Check::maps("GHQ-3.1-coassoc", h.grade_instance(&[("p", p), ("q", q), ("r", r)]), &lhs, &rhs));
            }
        }
    }

    for p in 0..n {
        for q in 0..n {
            let pq = g.mul(p, q);
            let inst = h.grade_instance(&[("p", p), ("q", q)]);
            let delta = h.comult(p, q);
            let lhs = delta.compose(h.mult(pq)).expect(BUILT);
            let rhs = laws::tensor_mult(h.mult(p), h.mult(q))
                .and_then(|m| m.compose(&delta.kron(delta)))
                .expect(BUILT);
            report.push(Check::maps("GHQ-3.1-comult-morphism", suffix(&inst, "mult"), &lhs, &rhs));
            report.push(Check::maps(
                "GHQ-3.1-comult-morphism",
                suffix(&inst, "unit"),
                &delta.compose(h.unit(pq)).expect(BUILT),
                &h.unit(p).kron(h.unit(q)),
            ));
        }
    }

    for p in 0..n {
        let inst = h.grade_instance(&[("p", p)]);
        let right = h.id(p).kron(&h.counit).compose(h.comult(p, e)).expect(BUILT);
        let left = h.counit.kron(&h.id(p)).compose(h.comult(e, p)).expect(BUILT);
        report.push(Check::maps("GHQ-3.2-counit", suffix(&inst, "right"), &right, &h.id(p)));
        report.push(Check::maps("GHQ-3.2-counit", suffix(&inst, "left"), &left, &h.id(p)));
    }
    let eps = &h.counit;
    report.push(Check::maps(
        "GHQ-3.2-counit-morphism",
        "mult",
        &eps.compose(h.mult(e)).expect(BUILT),
        &eps.kron(eps),
    ));
    report.push(Check::maps(
        "GHQ-3.2-counit-morphism",
        "unit",
        &eps.compose(h.unit(e)).expect(BUILT),
        &LinMap::scalar(h.field().one()),
    ));

    for p in 0..n {
        let pi = g.inv(p);
        let inst = h.grade_instance(&[("p", p)]);
        let (mu, s) = (h.mult(p), h.antipode(pi));
        let eps_id = laws::counit_left(eps, h.space(p));
        let id_eps = laws::counit_right(eps, h.space(p));
        let checks = [
            ("GHQ-3.3a", laws::s_first_inner_left(mu, s, h.comult(pi, p)), &eps_id),
            ("GHQ-3.3b", laws::s_second_inner_left(mu, s, h.comult(p, pi)), &eps_id),
            ("GHQ-3.4a", laws::s_second_outer_right(mu, s, h.comult(p, pi)), &id_eps),
            ("GHQ-3.4b", laws::s_first_outer_right(mu, s, h.comult(pi, p)), &id_eps),
        ];
        for (id, lhs, rhs) in checks {
            report.push(Check::maps(id, inst.clone(), &lhs.expect(BUILT), rhs));
        }
    }

    for p in 0..n {
        let pi = g.inv(p);
        let inst = h.grade_instance(&[("p", p)]);
        let s = h.antipode(p);
        let lhs = s.compose(h.mult(p)).expect(BUILT);
        let flip = laws::swap(h.field(), h.space(p), h.space(p));
        let rhs = LinMap::chain(&[h.mult(pi), &s.kron(s), &flip]).expect(BUILT);
        report.push(Check::maps("GHQ-S-antimultiplicative", inst.clone(), &lhs, &rhs));
        report.push(Check::maps("GHQ-S-unit", inst.clone(), &s.compose(h.unit(p)).expect(BUILT), h.unit(pi)));
        let bij = match s.invert() {
            Ok(_) => Check::pass("GHQ-S-bijective", inst),
            Err(err) => Check::fail("GHQ-S-bijective", inst, Witness::Note { detail: err.to_string() }),
        };
        report.push(if opts.require_invertible_antipode { bij } else { bij.informational() });
    }
    report
}

/// Checks the crossing axioms: grading of `π`, algebra isomorphism, counit,
/// antipode and comultiplication compatibility, multiplicativity, `π_e = id`.
pub fn validate_crossing(h: &CrossedGchq) -> Report {
    let g = &h.group;
    let n = g.order();
    let e = g.identity();
    let mut report = Report::new(format!("crossing over a group of order {n}"));
    for p in 0..n {
        for q in 0..n {
            let inst = h.grade_instance(&[("p", p), ("q", q)]);
            let pi = h.crossing(p, q);
            let target = g.conj(p, q);
            report.push(Check::from_bool(
                "CROSS-3.3-grade",
                inst.clone(),
                pi.domain() == h.space(q) && pi.codomain() == h.space(target),
                "crossing lands in the wrong component",
            ));
            let lhs = pi.compose(h.mult(q)).expect(BUILT);
            let rhs = h.mult(target).compose(&pi.kron(pi)).expect(BUILT);
            report.push(Check::maps("CROSS-3.3-algebra-morphism", inst.clone(), &lhs, &rhs));
            report.push(Check::maps("CROSS-3.3-unit", inst.clone(), &pi.compose(h.unit(q)).expect(BUILT), h.unit(target)));
            report.push(match pi.invert() {
                Ok(_) => Check::pass("CROSS-3.3-bijective", inst.clone()),
                Err(err) => Check::fail("CROSS-3.3-bijective", inst.clone(), Witness::Note { detail: err.to_string() }),
            });
            // π_p S_q = S_{pqp⁻¹} π_p on H_q
            let lhs = h.crossing(p, g.inv(q)).compose(h.antipode(q)).expect(BUILT);
            let rhs = h.antipode(target).compose(pi).expect(BUILT);
            report.push(Check::maps("CROSS-3.8-antipode", inst.clone(), &lhs, &rhs));
            if p == e {
                report.push(Check::maps("CROSS-3.3-identity", inst.clone(), pi, &h.id(q)));
            }
        }
        report.push(Check::maps(
            "CROSS-3.7-counit",
            h.grade_instance(&[("p", p)]),
            &h.counit.compose(h.crossing(p, e)).expect(BUILT),
            &h.counit,
        ));
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let inst = h.grade_instance(&[("p", p), ("q", q), ("r", r)]);
                let lhs = h.crossing(p, q).kron(h.crossing(p, r)).compose(h.comult(q, r)).expect(BUILT);
                let rhs = h
                    .comult(g.conj(p, q), g.conj(p, r))
                    .compose(h.crossing(p, g.mul(q, r)))
                    .expect(BUILT);
                report.push(Check::maps("CROSS-3.9-comult", inst, &lhs, &rhs));
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let inst = h.grade_instance(&[("p", p), ("q", q), ("r", r)]);
                let lhs = h.crossing(g.mul(p, q), r);
                let rhs = h.crossing(p, g.conj(q, r)).compose(h.crossing(q, r)).expect(BUILT);
                report.push(Check::maps("CROSS-3.3-multiplicative", inst, lhs, &rhs));
            }
        }
    }
    report
}

/// Both validators, as one report.
pub fn validate_all(h: &CrossedGchq) -> Report {
    let mut report = validate_gchq(h);
    report.extend(validate_crossing(h));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hq::loop_algebra;
    use crate::tables::{GroupAction, LoopTable};

    fn power_c3() -> CrossedGchq {
        let c3 = GroupTable::cyclic(3);
        let h = loop_algebra(&LoopTable::from(&c3), Field::Rational);
        let action = HopfAction::from_group_action(&GroupAction::inversion(&c3).unwrap(), &h).unwrap();
        power_construction(&h, &action).unwrap()
    }

    #[test]
    fn power_construction_validates() {
        let h = power_c3();
        let r = validate_gchq(&h);
        assert!(r.passed(), "{}", r.render_text());
        let c = validate_crossing(&h);
        assert!(c.passed(), "{}", c.render_text());
    }

    #[test]
    fn zeroed_comult_fails_counit() {
        let h = power_c3();
        let (p, e) = (1, 0);
        let zero = LinMap::zero(h.field(), h.comult(p, e).domain().clone(), h.comult(p, e).codomain().clone());
        let bad = h.with_comult(p, e, zero).unwrap();
        let r = validate_gchq(&bad);
        assert!(!r.id_passed("GHQ-3.2-counit"));
        let c = r.by_id("GHQ-3.2-counit").find(|c| !c.passed()).unwrap();
        assert!(matches!(c.witness, Some(Witness::Map { .. })));
    }

    #[test]
    fn non_automorphic_crossing_fails_algebra_morphism() {
        let h = power_c3();
        // π_flip|H_g sending every basis vector to g
        let m = h.crossing(1, 1);
        let bad_map = LinMap::from_basis_map(h.field(), m.domain().clone(), m.codomain().clone(), |_| 1).unwrap();
        let bad = h.with_crossing(1, 1, bad_map).unwrap();
        let r = validate_crossing(&bad);
        assert!(!r.id_passed("CROSS-3.3-algebra-morphism"));
    }

    #[test]
    fn shape_errors_are_malformed() {
        let h = power_c3();
        let wrong = h.id(0);
        assert!(matches!(h.with_antipode(1, wrong.kron(&wrong)), Err(Error::MalformedStructure(_))));
        assert!(matches!(h.with_antipode(7, wrong), Err(Error::IndexError { .. })));
    }

    #[test]
    fn antipode_flag_downgrades_bijectivity() {
        let h = power_c3();
        let a = h.antipode(1);
        let zero = LinMap::zero(h.field(), a.domain().clone(), a.codomain().clone());
        let bad = h.with_antipode(1, zero).unwrap();
        let strict = validate_gchq(&bad);
        let lenient = validate_gchq_with(&bad, GchqOptions { require_invertible_antipode: false });
        assert!(!strict.id_passed("GHQ-S-bijective"));
        assert!(lenient.by_id("GHQ-S-bijective").all(|c| c.passed() || !c.required));
    }
}
