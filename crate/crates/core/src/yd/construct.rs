use std::sync::Arc;

use super::{require_same_base, twisted_crossed_set_module, validate_yd, YDModule, YDMorphism, BUILT};
use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Space};
use crate::gchq::CrossedGchq;
use crate::report::{Check, Report, Witness};
use crate::tables::GroupAction;

fn require(construction: &'static str, v: YDModule) -> Result<YDModule> {
    let report = validate_yd(&v);
    let failed = report.required_failures().next().map(|c| format!("{} [{}]", c.id, c.instance));
    match failed {
        None => Ok(v),
        Some(check) => Err(Error::ConstructionFailed { construction, check }),
    }
}

/// `V ⊗ W` at grade `pq` with the diagonal action and the twisted coaction
/// `v⊗w ↦ v₀ ⊗ w₀ ⊗ w₁ π_{q⁻¹}(v₁)`. The result is validated.
pub fn yd_tensor(v: &YDModule, w: &YDModule) -> Result<YDModule> {
    require("tensor product", tensor_unchecked(v, w)?)
}

pub(crate) fn tensor_unchecked(v: &YDModule, w: &YDModule) -> Result<YDModule> {
    require_same_base(v, w)?;
    let h = v.base().clone();
    let g = h.group();
    let (p, q) = (v.grade(), w.grade());
    let f = h.field();
    let (vs, ws) = (v.space(), w.space());
    let space = vs.tensor(ws);
    let action = LinMap::chain(&[
        &v.action().kron(w.action()),
        &LinMap::permutation(f, &[h.space(p), h.space(q), vs, ws], &[0, 2, 1, 3]),
        &LinMap::kron_all(&[h.comult(p, q), &v.id(), &w.id()]),
    ])
    .expect(BUILT);
    let qi = g.inv(q);
    let coaction = (0..h.order())
        .map(|r| {
            let c = g.conj(q, r);
            let hr = h.space(r);
            LinMap::chain(&[
                &LinMap::kron_all(&[&v.id(), &w.id(), h.mult(r)]),
                &LinMap::permutation(f, &[vs, hr, ws, hr], &[0, 2, 3, 1]),
                &LinMap::kron_all(&[&v.id(), h.crossing(qi, c), &w.id(), &h.id(r)]),
                &v.coaction(c).kron(w.coaction(r)),
            ])
            .expect(BUILT)
        })
        .collect();
    let mut out = YDModule::new(h.clone(), g.mul(p, q), space, action, coaction, false)?;
    if v.is_strict() && w.is_strict() {
        let phi = out.action();
        let lhs = phi.compose(&h.id(out.grade()).kron(phi)).expect(BUILT);
        let rhs = phi.compose(&h.mult(out.grade()).kron(&out.id())).expect(BUILT);
        out = out.with_strict(lhs == rhs);
    }
    Ok(out)
}

/// `^qV` at grade `qpq⁻¹`: action twisted by `π_{q⁻¹}`, coaction
/// `ρ_r = (id ⊗ π_q)ρ_{q⁻¹rq}`. Same underlying space. The result is validated.
pub fn yd_conjugate(v: &YDModule, q: usize) -> Result<YDModule> {
    require("conjugation", conjugate_unchecked(v, q)?)
}

pub(crate) fn conjugate_unchecked(v: &YDModule, q: usize) -> Result<YDModule> {
    let h = v.base().clone();
    h.check_grade(q)?;
    let g = h.group();
    let qi = g.inv(q);
    let target = g.conj(q, v.grade());
    let action = v.action().compose(&h.crossing(qi, target).kron(&v.id())).expect(BUILT);
    let coaction = (0..h.order())
        .map(|r| {
            let s = g.conj(qi, r);
            v.id().kron(h.crossing(q, s)).compose(v.coaction(s)).expect(BUILT)
        })
        .collect();
    YDModule::new(h.clone(), target, v.space().clone(), action, coaction, v.is_strict())
}

fn compare_modules(id: &str, instance: String, a: &YDModule, b: &YDModule) -> Vec<Check> {
    if a.grade() != b.grade() || a.space() != b.space() {
        return vec![Check::fail(
            id,
            instance,
            Witness::Note { detail: format!("grades {} vs {} or spaces differ", a.grade(), b.grade()) },
        )];
    }
    let mut out = vec![Check::maps(id, format!("{instance},action"), a.action(), b.action())];
    for r in 0..a.base().order() {
        let label = a.base().group().label(r);
        out.push(Check::maps(id, format!("{instance},coaction r={label}"), a.coaction(r), b.coaction(r)));
    }
    out
}

/// `^{st}V = ^s(^tV)` and `^s(V ⊗ W) = ^sV ⊗ ^sW` as exact structure data.
pub fn check_conjugation_coherence(v: &YDModule, w: &YDModule, s: usize, t: usize) -> Result<Report> {
    require_same_base(v, w)?;
    let g = v.base().group();
    let mut report = Report::new("conjugation coherence");
    let inst = format!("s={},t={}", g.label(s), g.label(t));
    let direct = conjugate_unchecked(v, g.mul(s, t))?;
    let nested = conjugate_unchecked(&conjugate_unchecked(v, t)?, s)?;
    report.extend_checks(compare_modules("CONJ-4.6-composite", inst.clone(), &direct, &nested));
    let vw = tensor_unchecked(v, w)?;
    let lhs = conjugate_unchecked(&vw, s)?;
    let rhs = tensor_unchecked(&conjugate_unchecked(v, s)?, &conjugate_unchecked(w, s)?)?;
    report.extend_checks(compare_modules("CONJ-4.6-tensor", inst, &lhs, &rhs));
    Ok(report)
}

/// `V ⊕ W` with its inclusions and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: YDModule,
    pub inclusions: [YDMorphism; 2],
    pub projections: [YDMorphism; 2],
}

pub fn yd_direct_sum(v: &YDModule, w: &YDModule) -> Result<DirectSum> {
    require_same_base(v, w)?;
    if v.grade() != w.grade() {
        return Err(Error::GradeMismatch(v.grade(), w.grade()));
    }
    let h = v.base().clone();
    let f = h.field();
    let p = v.grade();
    let (nv, nw) = (v.dim(), w.dim());
    let n = nv + nw;
    let space = Space::atom(format!("{}⊕{}", v.space(), w.space()), n);
    let hp = h.dim(p);
    let mut entries = Vec::new();
    for i in 0..hp {
        for (m, shift, nm) in [(v.action(), 0, nv), (w.action(), nv, nw)] {
            for j in 0..nm {
                for (row, val) in m.column(i * nm + j) {
                    entries.push((row + shift, i * n + shift + j, val.clone()));
                }
            }
        }
    }
    let action = LinMap::from_entries(f, h.space(p).tensor(&space), space.clone(), entries)?;
    let mut coaction = Vec::with_capacity(h.order());
    for r in 0..h.order() {
        let dr = h.dim(r);
        let mut entries = Vec::new();
        for (m, shift, nm) in [(v.coaction(r), 0, nv), (w.coaction(r), nv, nw)] {
            for j in 0..nm {
                for (row, val) in m.column(j) {
                    let (a, b) = (row / dr, row % dr);
                    entries.push(((a + shift) * dr + b, j + shift, val.clone()));
                }
            }
        }
        coaction.push(LinMap::from_entries(f, space.clone(), space.tensor(h.space(r)), entries)?);
    }
    let sum = YDModule::new(h, p, space.clone(), action, coaction, v.is_strict() && w.is_strict())?;
    let inc = |m: &YDModule, shift: usize| {
        LinMap::from_basis_map(f, m.space().clone(), space.clone(), |j| j + shift).expect("in range")
    };
    let proj = |m: &YDModule, shift: usize| {
        LinMap::from_entries(f, space.clone(), m.space().clone(), (0..m.dim()).map(|j| (j, j + shift, f.one())))
            .expect("in range")
    };
    let inclusions = [
        YDMorphism::new(v.clone(), sum.clone(), inc(v, 0))?,
        YDMorphism::new(w.clone(), sum.clone(), inc(w, nv))?,
    ];
    let projections = [
        YDMorphism::new(sum.clone(), v.clone(), proj(v, 0))?,
        YDMorphism::new(sum.clone(), w.clone(), proj(w, nv))?,
    ];
    Ok(DirectSum { sum, inclusions, projections })
}

/// Diagnostic: which grades carry a twisted crossed-set module over
/// `power_construction(k[Γ], α)`. Every entry is informational.
pub fn graded_module_survey(base: Arc<CrossedGchq>, action: &GroupAction) -> Result<Report> {
    let mut report = Report::new("graded module survey");
    for p in 0..base.order() {
        let v = twisted_crossed_set_module(base.clone(), action, p)?;
        let r = validate_yd(&v);
        let first = r.required_failures().next().map(|c| c.id.clone()).unwrap_or_default();
        report.push(
            Check::from_bool("SURVEY-twisted-crossed-set", format!("p={}", base.group().label(p)), r.passed(), first)
                .informational(),
        );
    }
    Ok(report)
}
