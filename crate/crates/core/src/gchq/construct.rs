use super::{component_name, validate_all, CrossedGchq, BUILT};
use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Space};
use crate::hq::{validate_hopf_quasigroup, HopfQuasigroup};
use crate::report::{Check, Report};
use crate::tables::{GroupAction, GroupTable};

/// A group acting linearly on a Hopf quasigroup; `maps[g]` is the action of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAction {
    group: GroupTable,
    maps: Vec<LinMap>,
}

impl HopfAction {
    pub fn new(group: GroupTable, maps: Vec<LinMap>) -> Self {
        Self { group, maps }
    }

    /// Every element acts as the identity.
    pub fn trivial(group: GroupTable, h: &HopfQuasigroup) -> Self {
        let maps = vec![LinMap::identity(h.field(), h.space().clone()); group.order()];
        Self { group, maps }
    }

    /// Extends a table action on the basis of a loop algebra to permutation matrices.
    pub fn from_group_action(action: &GroupAction, h: &HopfQuasigroup) -> Result<Self> {
        if action.carrier().order() != h.dim() {
            return Err(Error::InvalidInput(format!(
                "action permutes {} elements but the Hopf quasigroup has dimension {}",
                action.carrier().order(),
                h.dim()
            )));
        }
        let maps = action
            .maps()
            .iter()
            .map(|perm| LinMap::from_basis_map(h.field(), h.space().clone(), h.space().clone(), |x| perm[x]))
            .collect::<Result<_>>()?;
        Ok(Self { group: action.actor().clone(), maps })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn maps(&self) -> &[LinMap] {
        &self.maps
    }

    /// Confirms that each element acts by a Hopf quasigroup automorphism and that
    /// the maps form an action.
    pub fn check(&self, h: &HopfQuasigroup) -> Result<()> {
        let g = &self.group;
        let space = h.space();
        if self.maps.len() != g.order() {
            return Err(Error::InvalidInput(format!("{} maps for a group of order {}", self.maps.len(), g.order())));
        }
        for (x, m) in self.maps.iter().enumerate() {
            if m.domain() != space || m.codomain() != space {
                return Err(Error::MalformedStructure(format!("action map {x} is not an endomorphism of {space}")));
            }
        }
        for (x, m) in self.maps.iter().enumerate() {
            let equations: [(&'static str, LinMap, LinMap); 5] = [
                ("mult", m.compose(h.mult()).expect(BUILT), h.mult().compose(&m.kron(m)).expect(BUILT)),
                ("unit", m.compose(h.unit()).expect(BUILT), h.unit().clone()),
                ("comult", m.kron(m).compose(h.comult()).expect(BUILT), h.comult().compose(m).expect(BUILT)),
                ("counit", h.counit().compose(m).expect(BUILT), h.counit().clone()),
                ("antipode", m.compose(h.antipode()).expect(BUILT), h.antipode().compose(m).expect(BUILT)),
            ];
            for (equation, lhs, rhs) in equations {
                let c = Check::maps("", "", &lhs, &rhs);
                if !c.passed() {
                    return Err(Error::ActionNotHopfAutomorphism { element: x, equation, witness: c.witness });
                }
            }
        }
        let id = LinMap::identity(h.field(), space.clone());
        let c = Check::maps("", "", &self.maps[g.identity()], &id);
        if !c.passed() {
            return Err(Error::ActionNotHopfAutomorphism { element: g.identity(), equation: "identity", witness: c.witness });
        }
        for x in g.elements() {
            for y in g.elements() {
                let c = Check::maps("", "", &self.maps[g.mul(x, y)], &self.maps[x].compose(&self.maps[y]).expect(BUILT));
                if !c.passed() {
                    return Err(Error::ActionNotHopfAutomorphism { element: g.mul(x, y), equation: "composition", witness: c.witness });
                }
            }
        }
        Ok(())
    }
}

fn require(construction: &'static str, report: &Report) -> Result<()> {
    match report.required_failures().next() {
        None => Ok(()),
        Some(c) => Err(Error::ConstructionFailed { construction, check: format!("{} [{}]", c.id, c.instance) }),
    }
}

/// The trivially graded structure with `H_e = h`.
pub fn from_hopf_quasigroup(h: &HopfQuasigroup) -> Result<CrossedGchq> {
    let report = validate_hopf_quasigroup(h);
    if let Some(c) = report.required_failures().next() {
        return Err(Error::InvalidInput(format!("not a Hopf quasigroup: {} fails", c.id)));
    }
    let group = GroupTable::cyclic(1);
    let h = h.renamed(&component_name(&group, 0));
    let id = LinMap::identity(h.field(), h.space().clone());
    CrossedGchq::new(
        group,
        vec![h.algebra().clone()],
        vec![h.comult().clone()],
        h.counit().clone(),
        vec![h.antipode().clone()],
        vec![id],
    )
}

/// `H^G`: one copy `H_p` of `h` per group element, with `Δ_{p,q} = Δ`,
/// `S_p = S` and `π_p|_{H_q}` the action of `p`.
pub fn power_construction(h: &HopfQuasigroup, action: &HopfAction) -> Result<CrossedGchq> {
    action.check(h)?;
    let g = action.group.clone();
    let n = g.order();
    let copies: Vec<HopfQuasigroup> = g.elements().map(|p| h.renamed(&component_name(&g, p))).collect();
    let sp = |p: usize| copies[p].space().clone();
    let relabel = |m: &LinMap, dom: Space, cod: Space| m.relabel(dom, cod).expect("copies share dimensions");
    let mut comult = Vec::with_capacity(n * n);
    let mut crossing = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            comult.push(relabel(h.comult(), sp(g.mul(p, q)), sp(p).tensor(&sp(q))));
            crossing.push(relabel(&action.maps[p], sp(q), sp(g.conj(p, q))));
        }
    }
    let antipode = (0..n).map(|p| relabel(h.antipode(), sp(p), sp(g.inv(p)))).collect();
    let counit = relabel(h.counit(), sp(g.identity()), Space::ground());
    let out = CrossedGchq::new(
        g.clone(),
        copies.iter().map(|c| c.algebra().clone()).collect(),
        comult,
        counit,
        antipode,
        crossing,
    )?;
    require("power construction", &validate_all(&out))?;
    Ok(out)
}

/// The mirror `H̃`: `H̃_p = H_{p⁻¹}` as an algebra,
/// `Δ̃_{p,q} = (π_q ⊗ id)Δ_{q⁻¹p⁻¹q, q⁻¹}`, `S̃_p = π_p S_{p⁻¹}`, `π̃ = π`.
pub fn mirror(h: &CrossedGchq) -> Result<CrossedGchq> {
    let input = validate_all(h);
    if let Some(c) = input.required_failures().next() {
        return Err(Error::InvalidInput(format!("mirror input fails {} [{}]", c.id, c.instance)));
    }
    let g = h.group().clone();
    let n = g.order();
    let components: Vec<_> = g.elements().map(|p| h.component(g.inv(p)).renamed(&component_name(&g, p))).collect();
    let sp = |p: usize| components[p].space().clone();
    let relabel = |m: LinMap, dom: Space, cod: Space| m.relabel(dom, cod).expect("mirror preserves dimensions");
    let mut comult = Vec::with_capacity(n * n);
    let mut crossing = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let qi = g.inv(q);
            let a = g.mul(g.mul(qi, g.inv(p)), q);
            let twisted = h
                .crossing(q, a)
                .kron(&h.id(qi))
                .compose(h.comult(a, qi))
                .expect(BUILT);
            comult.push(relabel(twisted, sp(g.mul(p, q)), sp(p).tensor(&sp(q))));
            crossing.push(relabel(h.crossing(p, qi).clone(), sp(q), sp(g.conj(p, q))));
        }
    }
    let antipode = (0..n)
        .map(|p| {
            let m = h.crossing(p, p).compose(h.antipode(g.inv(p))).expect(BUILT);
            relabel(m, sp(p), sp(g.inv(p)))
        })
        .collect();
    let counit = relabel(h.counit().clone(), sp(g.identity()), Space::ground());
    let out = CrossedGchq::new(g, components, comult, counit, antipode, crossing)?;
    require("mirror", &validate_all(&out))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::hq::loop_algebra;
    use crate::tables::LoopTable;

    fn kc(n: usize) -> HopfQuasigroup {
        loop_algebra(&LoopTable::from(&GroupTable::cyclic(n)), Field::Rational)
    }

    #[test]
    fn trivial_power_of_c2_has_group_like_comult() {
        let h = kc(2);
        let p = power_construction(&h, &HopfAction::trivial(GroupTable::cyclic(2), &h)).unwrap();
        // Δ_{p,q}(i_{pq}(g)) = i_p(g) ⊗ i_q(g)
        for a in 0..2 {
            for b in 0..2 {
                let d = p.comult(a, b);
                assert_eq!(d.column(1), &[(3, Field::Rational.one())]);
            }
        }
    }

    #[test]
    fn inversion_crossing_sends_x_to_inverse() {
        let h = kc(3);
        let a = HopfAction::from_group_action(&GroupAction::inversion(&GroupTable::cyclic(3)).unwrap(), &h).unwrap();
        let p = power_construction(&h, &a).unwrap();
        for q in 0..2 {
            let pi = p.crossing(1, q);
            assert_eq!(pi.column(1), &[(2, Field::Rational.one())]);
            assert_eq!(pi.column(0), &[(0, Field::Rational.one())]);
        }
    }

    #[test]
    fn negation_is_not_a_hopf_automorphism() {
        let h = kc(2);
        let q = Field::Rational;
        let neg = LinMap::from_dense(q, h.space().clone(), h.space().clone(), &[
            vec![q.one(), q.zero()],
            vec![q.zero(), q.from_i64(-1)],
        ])
        .unwrap();
        let action = HopfAction::new(GroupTable::cyclic(2), vec![LinMap::identity(q, h.space().clone()), neg]);
        match power_construction(&h, &action) {
            Err(Error::ActionNotHopfAutomorphism { element: 1, equation, witness }) => {
                assert_eq!(equation, "comult");
                assert!(witness.is_some());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mirror_of_trivial_grading_is_identity() {
        let h = from_hopf_quasigroup(&kc(2)).unwrap();
        assert_eq!(mirror(&h).unwrap(), h);
        let o = from_hopf_quasigroup(&loop_algebra(&LoopTable::octonion_units(), Field::Rational)).unwrap();
        assert_eq!(mirror(&o).unwrap(), o);
    }

    #[test]
    fn mirror_of_power_validates_and_twists_antipode() {
        let c3 = GroupTable::cyclic(3);
        let h = kc(3);
        let a = HopfAction::from_group_action(&GroupAction::inversion(&c3).unwrap(), &h).unwrap();
        let m = mirror(&power_construction(&h, &a).unwrap()).unwrap();
        assert!(validate_all(&m).passed());
        // S̃_p(i_p(x)) = i_{p⁻¹}(p(S(x))): for the flip, x⁻¹ then inverted back to x
        let s = m.antipode(1);
        for x in 0..3 {
            assert_eq!(s.column(x), &[(x, Field::Rational.one())]);
        }
    }

    #[test]
    fn invalid_hopf_quasigroup_is_rejected() {
        let h = kc(2);
        let bad = h.with_antipode(LinMap::zero(h.field(), h.space().clone(), h.space().clone())).unwrap();
        assert!(matches!(from_hopf_quasigroup(&bad), Err(Error::InvalidInput(_))));
    }
}
