//! Unital, not necessarily associative, algebras given by structure constants.

use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Scalar, Space};
use crate::report::Check;
use crate::tables::CayleyTable;

/// `(A, μ, η)` with `μ: A⊗A → A` and `η: k → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalAlgebra {
    space: Space,
    mult: LinMap,
    unit: LinMap,
}

impl UnitalAlgebra {
    pub fn new(mult: LinMap, unit: LinMap) -> Result<Self> {
        let space = unit.codomain().clone();
        if unit.domain() != &Space::ground() {
            return Err(Error::MalformedStructure(format!("unit must start at k, found {}", unit.domain())));
        }
        if mult.codomain() != &space || mult.domain() != &space.tensor(&space) {
            return Err(Error::MalformedStructure(format!(
                "multiplication {} ← {} does not match unit space {space}",
                mult.codomain(),
                mult.domain()
            )));
        }
        Ok(Self { space, mult, unit })
    }

    /// `e_i e_j = Σ_k c e_k` for each triplet `(i, j, k, c)`; repeated triplets add up.
    pub fn from_structure_constants(
        field: Field,
        name: &str,
        dim: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: &[Scalar],
    ) -> Result<Self> {
        let space = Space::atom(name, dim);
        if unit.len() != dim {
            return Err(Error::MalformedStructure(format!("unit vector has {} entries, dim is {dim}", unit.len())));
        }
        let mut entries = Vec::new();
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::MalformedStructure(format!("structure constant ({i},{j},{k}) out of range")));
            }
            entries.push((k, i * dim + j, c));
        }
        let mult = LinMap::from_entries(field, space.tensor(&space), space.clone(), entries)?;
        let unit = LinMap::from_entries(
            field,
            Space::ground(),
            space,
            unit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, 0, c.clone())),
        )?;
        Self::new(mult, unit)
    }

    /// The loop algebra `k[L]` on the basis of loop elements.
    pub fn of_table(field: Field, name: &str, t: &CayleyTable) -> Result<Self> {
        let n = t.order();
        let space = Space::atom(name, n);
        let mult = LinMap::from_basis_map(field, space.tensor(&space), space.clone(), |c| t.table[c / n][c % n])?;
        let unit = LinMap::from_basis_map(field, Space::ground(), space, |_| 0)?;
        Self::new(mult, unit)
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.field(), self.space.clone())
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for c in 0..n * n {
            for (k, v) in self.mult.column(c) {
                out.push((c / n, c % n, *k, v.clone()));
            }
        }
        out
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|k| self.unit.get(k, 0)).collect()
    }

    /// The same algebra on a freshly named copy of its space.
    pub fn renamed(&self, name: &str) -> Self {
        let space = Space::atom(name, self.dim());
        let mult = self.mult.relabel(space.tensor(&space), space.clone()).expect("same dims");
        let unit = self.unit.relabel(Space::ground(), space.clone()).expect("same dims");
        Self { space, mult, unit }
    }

    /// `μ(η ⊗ id) = id = μ(id ⊗ η)`.
    pub fn unital_checks(&self, id: &str, instance: &str) -> Vec<Check> {
        let one = self.id();
        let left = self.mult.compose(&self.unit.kron(&one)).expect("shapes fixed at construction");
        let right = self.mult.compose(&one.kron(&self.unit)).expect("shapes fixed at construction");
        vec![
            Check::maps(id, suffix(instance, "left"), &left, &one),
            Check::maps(id, suffix(instance, "right"), &right, &one),
        ]
    }

    /// `μ(μ ⊗ id) = μ(id ⊗ μ)` on `A⊗A⊗A`.
    pub fn associativity_check(&self, id: &str, instance: &str) -> Check {
        let one = self.id();
        let left = self.mult.compose(&self.mult.kron(&one)).expect("shapes fixed at construction");
        let right = self.mult.compose(&one.kron(&self.mult)).expect("shapes fixed at construction");
        Check::maps(id, instance, &left, &right)
    }

    pub fn with_mult(&self, mult: LinMap) -> Result<Self> {
        Self::new(mult, self.unit.clone())
    }
}

pub(crate) fn suffix(instance: &str, tail: &str) -> String {
    if instance.is_empty() {
        tail.to_string()
    } else {
        format!("{instance},{tail}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::GroupTable;

    #[test]
    fn structure_constants_round_trip() {
        let q = Field::Rational;
        let a = UnitalAlgebra::of_table(q, "A", GroupTable::cyclic(3).cayley()).unwrap();
        let b = UnitalAlgebra::from_structure_constants(q, "A", 3, a.structure_constants(), &a.unit_vector()).unwrap();
        assert_eq!(a, b);
        // g·g² = e
        assert!(a.structure_constants().contains(&(1, 2, 0, q.one())));
    }

    #[test]
    fn group_algebra_is_unital_and_associative() {
        let a = UnitalAlgebra::of_table(Field::Rational, "A", GroupTable::symmetric(3).cayley()).unwrap();
        assert!(a.unital_checks("U", "").iter().all(Check::passed));
        assert!(a.associativity_check("A", "").passed());
    }

    #[test]
    fn bad_unit_length_is_malformed() {
        let r = UnitalAlgebra::from_structure_constants(Field::Rational, "A", 2, vec![], &[Field::Rational.one()]);
        assert!(matches!(r, Err(Error::MalformedStructure(_))));
    }
}
