use super::construct::{conjugate_unchecked, tensor_unchecked};
use super::{require_same_base, YDModule, YDMorphism, BUILT};
use crate::error::{Error, Result};
use crate::exactlin::LinMap;
use crate::report::{Check, Report};

fn require_strict(v: &YDModule) -> Result<()> {
    if v.is_strict() {
        Ok(())
    } else {
        Err(Error::NotStrict(format!("grade {} of dimension {}", v.grade(), v.dim())))
    }
}

fn gate(v: &YDModule, w: &YDModule) -> Result<()> {
    require_same_base(v, w)?;
    require_strict(v)?;
    require_strict(w)
}

/// `C_{V,W}: V⊗W → ^pW⊗V`, `v⊗w ↦ S_{q⁻¹}(v_{(1,q⁻¹)})·w ⊗ v₀` for `V` at `p`, `W` at `q`.
///
/// `^pW` shares its space with `W`, so the codomain is `W⊗V`.
pub fn braiding(v: &YDModule, w: &YDModule) -> Result<LinMap> {
    gate(v, w)?;
    Ok(braiding_unchecked(v, w))
}

fn braiding_unchecked(v: &YDModule, w: &YDModule) -> LinMap {
    let h = v.base();
    let g = h.group();
    let q = w.grade();
    let qi = g.inv(q);
    LinMap::chain(&[
        &w.action().kron(&v.id()),
        &LinMap::permutation(v.field(), &[v.space(), h.space(q), w.space()], &[1, 2, 0]),
        &LinMap::kron_all(&[&v.id(), h.antipode(qi), &w.id()]),
        &v.coaction(qi).kron(&w.id()),
    ])
    .expect(BUILT)
}

/// `C⁻¹_{V,W}: ^pW⊗V → V⊗W`, `w⊗v ↦ v₀ ⊗ v_{(1,q)}·w`.
pub fn braiding_inverse(v: &YDModule, w: &YDModule) -> Result<LinMap> {
    gate(v, w)?;
    let h = v.base();
    let q = w.grade();
    Ok(LinMap::chain(&[
        &v.id().kron(w.action()),
        &LinMap::permutation(v.field(), &[w.space(), v.space(), h.space(q)], &[1, 2, 0]),
        &w.id().kron(v.coaction(q)),
    ])
    .expect(BUILT))
}

fn same_source(m: &YDMorphism, v: &YDModule, which: &str) -> Result<()> {
    if m.source().space() == v.space() && m.source().same_structure(v) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("morphism {which} does not start at the corresponding module")))
    }
}

/// The braided crossed-category law suite for `V` at `p`, `W` at `q`, `X` at `s`,
/// with `f: V → V'` and `g: W → W'`.
pub fn check_braiding_laws(v: &YDModule, w: &YDModule, x: &YDModule, f: &YDMorphism, g: &YDMorphism) -> Result<Report> {
    gate(v, w)?;
    gate(v, x)?;
    gate(f.target(), g.target())?;
    gate(v, f.target())?;
    same_source(f, v, "f")?;
    same_source(g, w, "g")?;
    let h = v.base();
    let grp = h.group();
    let (p, q) = (v.grade(), w.grade());
    let mut report = Report::new("braiding laws");

    let c_vw = braiding_unchecked(v, w);
    let c_inv = braiding_inverse(v, w)?;
    let source = tensor_unchecked(v, w)?;
    let target = tensor_unchecked(&conjugate_unchecked(w, p)?, v)?;

    report.push(Check::from_bool(
        "BRAID-grade",
        "",
        target.grade() == source.grade() && c_vw.codomain() == target.space() && c_vw.domain() == source.space(),
        format!("braiding lands at grade {} but V⊗W has grade {}", target.grade(), source.grade()),
    ));

    let pq = source.grade();
    let lhs = c_vw.compose(source.action()).expect(BUILT);
    let rhs = target.action().compose(&h.id(pq).kron(&c_vw)).expect(BUILT);
    report.push(Check::maps("BRAID-4.8-linear", "", &lhs, &rhs));
    for r in 0..h.order() {
        let lhs = target.coaction(r).compose(&c_vw).expect(BUILT);
        let rhs = c_vw.kron(&h.id(r)).compose(source.coaction(r)).expect(BUILT);
        report.push(Check::maps("BRAID-4.8-colinear", format!("r={}", grp.label(r)), &lhs, &rhs));
    }

    // C_{V⊗W,X} = (C_{V,^qX} ⊗ id_W)(id_V ⊗ C_{W,X})
    let qx = conjugate_unchecked(x, q)?;
    let c_wx = braiding_unchecked(w, x);
    let c_v_qx = braiding_unchecked(v, &qx);
    let lhs = braiding_unchecked(&source, x);
    let rhs = c_v_qx.kron(&w.id()).compose(&v.id().kron(&c_wx)).expect(BUILT);
    report.push(Check::maps("BRAID-2.2-tensor-left", "", &lhs, &rhs));

    // C_{V,W⊗X} = (id_{^pW} ⊗ C_{V,X})(C_{V,W} ⊗ id_X)
    let wx = tensor_unchecked(w, x)?;
    let c_vx = braiding_unchecked(v, x);
    let lhs = braiding_unchecked(v, &wx);
    let rhs = w.id().kron(&c_vx).compose(&c_vw.kron(&x.id())).expect(BUILT);
    report.push(Check::maps("BRAID-2.3-tensor-right", "", &lhs, &rhs));

    for s in grp.elements() {
        let conj = braiding_unchecked(&conjugate_unchecked(v, s)?, &conjugate_unchecked(w, s)?);
        report.push(Check::maps("BRAID-2.4-conjugation", format!("s={}", grp.label(s)), &conj, &c_vw));
    }

    // ((^p g) ⊗ f) C_{V,W} = C_{V',W'} (f ⊗ g); ^p g has the matrix of g
    let lhs = g.map().kron(f.map()).compose(&c_vw).expect(BUILT);
    let rhs = braiding_unchecked(f.target(), g.target()).compose(&f.map().kron(g.map())).expect(BUILT);
    report.push(Check::maps("BRAID-2.1-naturality", "", &lhs, &rhs));

    report.push(Check::maps("BRAID-4.9-inverse-left", "", &c_inv.compose(&c_vw).expect(BUILT), &source.id()));
    report.push(Check::maps("BRAID-4.9-inverse-right", "", &c_vw.compose(&c_inv).expect(BUILT), &target.id()));
    report.push(match c_vw.invert() {
        Ok(m) => Check::maps("BRAID-4.9-invert-oracle", "", &m, &c_inv),
        Err(e) => Check::from_bool("BRAID-4.9-invert-oracle", "", false, e.to_string()),
    });

    // Yang-Baxter form of the two composition conditions on V⊗W⊗X
    let pw = conjugate_unchecked(w, p)?;
    let px = conjugate_unchecked(x, p)?;
    let lhs = LinMap::chain(&[
        &braiding_unchecked(&pw, &px).kron(&v.id()),
        &w.id().kron(&c_vx),
        &c_vw.kron(&x.id()),
    ])
    .expect(BUILT);
    let rhs = LinMap::chain(&[&x.id().kron(&c_vw), &c_v_qx.kron(&w.id()), &v.id().kron(&c_wx)]).expect(BUILT);
    report.push(Check::maps("BRAID-YBE", "", &lhs, &rhs));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::tests::group_base;
    use super::super::{crossed_set_module, regular_quasimodule, trivial_module, yd_direct_sum};
    use super::*;
    use crate::exactlin::Field;
    use crate::gchq::from_hopf_quasigroup;
    use crate::hq::loop_algebra;
    use crate::tables::{GroupTable, LoopTable};
    use std::sync::Arc;

    #[test]
    fn trivial_braiding_is_identity() {
        let t = trivial_module(group_base(&GroupTable::cyclic(2)));
        assert!(braiding(&t, &t).unwrap().is_identity());
        assert!(braiding_inverse(&t, &t).unwrap().is_identity());
        let id = YDMorphism::identity(&t);
        assert!(check_braiding_laws(&t, &t, &t, &id, &id).unwrap().passed());
    }

    #[test]
    fn s3_braiding_is_conjugation_swap() {
        let s3 = GroupTable::symmetric(3);
        let v = crossed_set_module(group_base(&s3), &s3).unwrap();
        let c = braiding(&v, &v).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let image = s3.mul(s3.mul(s3.inv(x), y), x) * 6 + x;
                assert_eq!(c.column(x * 6 + y), &[(image, Field::Rational.one())]);
            }
        }
    }

    #[test]
    fn c2_braiding_is_flip() {
        let c2 = GroupTable::cyclic(2);
        let v = crossed_set_module(group_base(&c2), &c2).unwrap();
        let flip = LinMap::permutation(v.field(), &[v.space(), v.space()], &[1, 0]);
        assert_eq!(braiding(&v, &v).unwrap(), flip);
    }

    #[test]
    fn s3_laws_with_inclusions() {
        let s3 = GroupTable::symmetric(3);
        let base = group_base(&s3);
        let v = crossed_set_module(base.clone(), &s3).unwrap();
        let sum = yd_direct_sum(&v, &trivial_module(base)).unwrap();
        let r = check_braiding_laws(&v, &v, &v, &sum.inclusions[0], &sum.inclusions[0]).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn quasimodules_are_refused() {
        let base = Arc::new(
            from_hopf_quasigroup(&loop_algebra(&LoopTable::octonion_units(), Field::Rational)).unwrap(),
        );
        let q = regular_quasimodule(base).unwrap();
        assert!(matches!(braiding(&q, &q), Err(Error::NotStrict(_))));
        assert!(matches!(braiding_inverse(&q, &q), Err(Error::NotStrict(_))));
    }
}
