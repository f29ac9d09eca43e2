use super::{require_same_base, YDModule, BUILT};
use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Scalar};
use crate::report::{Check, Report};

/// A linear map between two modules of the same grade over the same base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDMorphism {
    source: YDModule,
    target: YDModule,
    map: LinMap,
}

impl YDMorphism {
    /// Checks shapes only; linearity and colinearity are reported by [`YDMorphism::validate`].
    pub fn new(source: YDModule, target: YDModule, map: LinMap) -> Result<Self> {
        require_same_base(&source, &target)?;
        if source.grade() != target.grade() {
            return Err(Error::GradeMismatch(source.grade(), target.grade()));
        }
        if map.domain() != source.space() || map.codomain() != target.space() {
            return Err(Error::MalformedStructure(format!(
                "morphism is {} ← {}, expected {} ← {}",
                map.codomain(),
                map.domain(),
                target.space(),
                source.space()
            )));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(v: &YDModule) -> Self {
        Self { source: v.clone(), target: v.clone(), map: v.id() }
    }

    pub fn scalar(v: &YDModule, c: &Scalar) -> Self {
        Self { source: v.clone(), target: v.clone(), map: v.id().scale(c) }
    }

    pub fn source(&self) -> &YDModule {
        &self.source
    }

    pub fn target(&self) -> &YDModule {
        &self.target
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &YDMorphism) -> Result<YDMorphism> {
        let map = self.map.compose(&other.map)?;
        Self::new(other.source.clone(), self.target.clone(), map)
    }

    /// `H_p`-linearity and colinearity for every `r`.
    pub fn validate(&self) -> Report {
        let base = self.source.base();
        let p = self.source.grade();
        let mut report = Report::new("Yetter-Drinfeld morphism");
        let lhs = self.map.compose(self.source.action()).expect(BUILT);
        let rhs = self.target.action().compose(&base.id(p).kron(&self.map)).expect(BUILT);
        report.push(Check::maps("MOR-4.2-linear", "", &lhs, &rhs));
        for r in 0..base.order() {
            let lhs = self.target.coaction(r).compose(&self.map).expect(BUILT);
            let rhs = self.map.kron(&base.id(r)).compose(self.source.coaction(r)).expect(BUILT);
            report.push(Check::maps("MOR-4.2-colinear", self.source.instance(r), &lhs, &rhs));
        }
        report
    }
}
