//! Composite maps shared by the Hopf-quasigroup and group-cograded validators.
//!
//! Each function builds one side of an antipode or morphism identity as a
//! single linear map, so the identity becomes one matrix comparison.

use crate::error::Result;
use crate::exactlin::{LinMap, Space};

fn id_of(mu: &LinMap) -> LinMap {
    LinMap::identity(mu.field(), mu.codomain().clone())
}

/// `h ⊗ g ↦ S(h₁)(h₂ g)`.
pub(crate) fn s_first_inner_left(mu: &LinMap, s: &LinMap, delta: &LinMap) -> Result<LinMap> {
    let a = id_of(mu);
    LinMap::chain(&[mu, &a.kron(mu), &LinMap::kron_all(&[s, &a, &a]), &delta.kron(&a)])
}

/// `h ⊗ g ↦ h₁(S(h₂) g)`.
pub(crate) fn s_second_inner_left(mu: &LinMap, s: &LinMap, delta: &LinMap) -> Result<LinMap> {
    let a = id_of(mu);
    LinMap::chain(&[mu, &a.kron(mu), &LinMap::kron_all(&[&a, s, &a]), &delta.kron(&a)])
}

/// `g ⊗ h ↦ (g h₁) S(h₂)`.
pub(crate) fn s_second_outer_right(mu: &LinMap, s: &LinMap, delta: &LinMap) -> Result<LinMap> {
    let a = id_of(mu);
    LinMap::chain(&[mu, &mu.kron(&a), &LinMap::kron_all(&[&a, &a, s]), &a.kron(delta)])
}

/// `g ⊗ h ↦ (g S(h₁)) h₂`.
pub(crate) fn s_first_outer_right(mu: &LinMap, s: &LinMap, delta: &LinMap) -> Result<LinMap> {
    let a = id_of(mu);
    LinMap::chain(&[mu, &mu.kron(&a), &LinMap::kron_all(&[&a, s, &a]), &a.kron(delta)])
}

/// `g ⊗ h ↦ g (h₁ S(h₂))`.
pub(crate) fn s_second_inner_right(mu: &LinMap, s: &LinMap, delta: &LinMap) -> Result<LinMap> {
    let a = id_of(mu);
    LinMap::chain(&[mu, &a.kron(mu), &LinMap::kron_all(&[&a, &a, s]), &a.kron(delta)])
}

/// `ε ⊗ id_A`.
pub(crate) fn counit_left(eps: &LinMap, a: &Space) -> LinMap {
    eps.kron(&LinMap::identity(eps.field(), a.clone()))
}

/// `id_A ⊗ ε`.
pub(crate) fn counit_right(eps: &LinMap, a: &Space) -> LinMap {
    LinMap::identity(eps.field(), a.clone()).kron(eps)
}

/// The flip `A ⊗ B → B ⊗ A`.
pub(crate) fn swap(mu_field: crate::exactlin::Field, a: &Space, b: &Space) -> LinMap {
    LinMap::permutation(mu_field, &[a, b], &[1, 0])
}

/// Multiplication of the tensor algebra `A ⊗ B`: `(μ_A ⊗ μ_B)(id ⊗ τ ⊗ id)`.
pub(crate) fn tensor_mult(mu_a: &LinMap, mu_b: &LinMap) -> Result<LinMap> {
    let (a, b) = (mu_a.codomain(), mu_b.codomain());
    let shuffle = LinMap::permutation(mu_a.field(), &[a, b, a, b], &[0, 2, 1, 3]);
    mu_a.kron(mu_b).compose(&shuffle)
}
