use std::fmt;
use std::sync::Arc;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A named basis factor: one tensor leg of a [`Space`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    name: Arc<str>,
    dim: usize,
}

impl Atom {
    pub fn new(name: impl Into<Arc<str>>, dim: usize) -> Self {
        Self { name: name.into(), dim }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// A based vector space written as a flat tensor product of atoms.
///
/// The empty product is the ground field `k`, so `k ⊗ V` and `V` are the same
/// space, and `(U ⊗ V) ⊗ W` equals `U ⊗ (V ⊗ W)`. Basis vectors are ordered
/// lexicographically with the leftmost factor varying slowest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Space {
    atoms: Vec<Atom>,
}

impl Space {
    pub fn ground() -> Self {
        Self::default()
    }

    pub fn atom(name: impl Into<Arc<str>>, dim: usize) -> Self {
        Self { atoms: vec![Atom::new(name, dim)] }
    }

    pub fn from_atoms(atoms: Vec<Atom>) -> Self {
        Self { atoms }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn dim(&self) -> usize {
        self.atoms.iter().map(|a| a.dim).product()
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Space { atoms }
    }

    pub fn tensor_all<'a>(spaces: impl IntoIterator<Item = &'a Space>) -> Space {
        let mut atoms = Vec::new();
        for s in spaces {
            atoms.extend(s.atoms.iter().cloned());
        }
        Space { atoms }
    }

    /// Splits a flat basis index into one index per atom.
    pub fn split_index(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.atoms.len()];
        for (slot, atom) in out.iter_mut().zip(&self.atoms).rev() {
            *slot = index % atom.dim;
            index /= atom.dim;
        }
        out
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "k");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{}", a.name)?;
        }
        Ok(())
    }
}

/// An exact linear map between based spaces, stored column-sparse.
///
/// Column `c` holds the image of the `c`-th domain basis vector as a list of
/// `(row, value)` pairs sorted by row with no explicit zeros, so the derived
/// equality is the dense-matrix equality (plus agreement of the spaces).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    domain: Space,
    codomain: Space,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl LinMap {
    pub fn zero(field: Field, domain: Space, codomain: Space) -> Self {
        let cols = vec![Vec::new(); domain.dim()];
        Self { field, domain, codomain, cols }
    }

    pub fn identity(field: Field, space: Space) -> Self {
        let n = space.dim();
        let cols = (0..n).map(|i| vec![(i, field.one())]).collect();
        Self { field, domain: space.clone(), codomain: space, cols }
    }

    /// The 1×1 map `k → k` multiplying by `c`.
    pub fn scalar(c: Scalar) -> Self {
        let field = c.field();
        let mut m = Self::zero(field, Space::ground(), Space::ground());
        m.set(0, 0, c);
        m
    }

    /// Builds the map sending basis vector `j` to basis vector `image(j)`.
    pub fn from_basis_map(
        field: Field,
        domain: Space,
        codomain: Space,
        image: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        let rows = codomain.dim();
        let mut cols = Vec::with_capacity(domain.dim());
        for j in 0..domain.dim() {
            let i = image(j);
            if i >= rows {
                return Err(Error::IndexError { what: "codomain basis", index: i, size: rows });
            }
            cols.push(vec![(i, field.one())]);
        }
        Ok(Self { field, domain, codomain, cols })
    }

    /// Builds a map from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_entries(
        field: Field,
        domain: Space,
        codomain: Space,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let (rows, ncols) = (codomain.dim(), domain.dim());
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (r, c, v) in entries {
            if r >= rows {
                return Err(Error::IndexError { what: "row", index: r, size: rows });
            }
            if c >= ncols {
                return Err(Error::IndexError { what: "column", index: c, size: ncols });
            }
            if v.field() != field {
                return Err(Error::InvalidField(format!("entry over {} in a map over {field}", v.field())));
            }
            raw[c].push((r, v));
        }
        let cols = raw.into_iter().map(normalize_column).collect();
        Ok(Self { field, domain, codomain, cols })
    }

    /// Builds a map from a row-major dense table.
    pub fn from_dense(field: Field, domain: Space, codomain: Space, rows: &[Vec<Scalar>]) -> Result<Self> {
        if rows.len() != codomain.dim() {
            return Err(Error::MalformedStructure(format!(
                "expected {} rows for {codomain}, found {}",
                codomain.dim(),
                rows.len()
            )));
        }
        let ncols = domain.dim();
        let mut entries = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::MalformedStructure(format!(
                    "row {r} has {} entries, expected {ncols} for {domain}",
                    row.len()
                )));
            }
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    entries.push((r, c, v.clone()));
                }
            }
        }
        Self::from_entries(field, domain, codomain, entries)
    }

    /// The permutation `B₀ ⊗ … ⊗ Bₙ → B_{order[0]} ⊗ … ⊗ B_{order[n]}` of tensor blocks.
    pub fn permutation(field: Field, blocks: &[&Space], order: &[usize]) -> Self {
        assert_eq!(blocks.len(), order.len(), "order must list every block once");
        let mut seen = vec![false; blocks.len()];
        for &o in order {
            assert!(!seen[o], "order must be a permutation");
            seen[o] = true;
        }
        let dims: Vec<usize> = blocks.iter().map(|b| b.dim()).collect();
        let domain = Space::tensor_all(blocks.iter().copied());
        let codomain = Space::tensor_all(order.iter().map(|&o| blocks[o]));
        let n = domain.dim();
        let mut cols = Vec::with_capacity(n);
        let mut digits = vec![0usize; dims.len()];
        for j in 0..n {
            let mut rest = j;
            for k in (0..dims.len()).rev() {
                digits[k] = rest % dims[k];
                rest /= dims[k];
            }
            let mut i = 0;
            for &o in order {
                i = i * dims[o] + digits[o];
            }
            cols.push(vec![(i, field.one())]);
        }
        Self { field, domain, codomain, cols }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn cols(&self) -> usize {
        self.domain.dim()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.cols[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => self.cols[c][pos].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// Overwrites one entry.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows() && c < self.cols(), "entry ({r},{c}) out of range");
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) if v.is_zero() => {
                col.remove(pos);
            }
            Ok(pos) => col[pos].1 = v,
            Err(_) if v.is_zero() => {}
            Err(pos) => col.insert(pos, (r, v)),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.cols()]; self.rows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    /// Returns the same matrix viewed between different spaces of equal dimensions.
    pub fn relabel(&self, domain: Space, codomain: Space) -> Result<Self> {
        if domain.dim() != self.domain.dim() || codomain.dim() != self.codomain.dim() {
            return Err(Error::DomainMismatch {
                left: format!("{codomain} ← {domain}"),
                right: format!("{} ← {}", self.codomain, self.domain),
            });
        }
        Ok(Self { field: self.field, domain, codomain, cols: self.cols.clone() })
    }

    /// `self ∘ g`, defined when `self.domain() == g.codomain()`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if self.domain != g.codomain {
            return Err(Error::DomainMismatch {
                left: format!("({} ← {})", self.codomain, self.domain),
                right: format!("({} ← {})", g.codomain, g.domain),
            });
        }
        let cols = g
            .cols
            .iter()
            .map(|gcol| {
                let mut acc = Vec::new();
                for (k, gv) in gcol {
                    for (i, fv) in &self.cols[*k] {
                        acc.push((*i, fv * gv));
                    }
                }
                normalize_column(acc)
            })
            .collect();
        Ok(LinMap { field: self.field, domain: g.domain.clone(), codomain: self.codomain.clone(), cols })
    }

    /// Composes a written-left-to-right chain: `chain(&[f, g, h]) = f ∘ g ∘ h`.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap> {
        let (last, rest) = maps.split_last().expect("chain needs at least one map");
        let mut acc = (*last).clone();
        for f in rest.iter().rev() {
            acc = f.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ g`.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        assert_eq!(self.field, g.field, "kron across fields");
        let grows = g.rows();
        let mut cols = Vec::with_capacity(self.cols() * g.cols());
        for fcol in &self.cols {
            for gcol in &g.cols {
                let mut col = Vec::with_capacity(fcol.len() * gcol.len());
                for (a, fv) in fcol {
                    for (b, gv) in gcol {
                        col.push((a * grows + b, fv * gv));
                    }
                }
                col.retain(|(_, v)| !v.is_zero());
                cols.push(col);
            }
        }
        LinMap {
            field: self.field,
            domain: self.domain.tensor(&g.domain),
            codomain: self.codomain.tensor(&g.codomain),
            cols,
        }
    }

    pub fn kron_all(maps: &[&LinMap]) -> LinMap {
        let (first, rest) = maps.split_first().expect("kron_all needs at least one map");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::DomainMismatch {
                left: format!("({} ← {})", self.codomain, self.domain),
                right: format!("({} ← {})", other.codomain, other.domain),
            });
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| normalize_column(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        Ok(LinMap { field: self.field, domain: self.domain.clone(), codomain: self.codomain.clone(), cols })
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v * c)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        LinMap { field: self.field, domain: self.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    pub fn transpose(&self) -> LinMap {
        let mut entries = Vec::with_capacity(self.nnz());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                entries.push((c, *r, v.clone()));
            }
        }
        LinMap::from_entries(self.field, self.codomain.clone(), self.domain.clone(), entries)
            .expect("transposed entries are in range")
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain
            && self.cols.iter().enumerate().all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }

    /// First position (in column-major order) where two equally shaped maps differ,
    /// as `(row, col, self_value, other_value)`.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize, Scalar, Scalar)> {
        assert_eq!(self.cols(), other.cols(), "first_difference needs equal shapes");
        for (c, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let mut rows: Vec<usize> = a.iter().chain(b.iter()).map(|(r, _)| *r).collect();
            rows.sort_unstable();
            rows.dedup();
            for r in rows {
                let (x, y) = (self.get(r, c), other.get(r, c));
                if x != y {
                    return Some((r, c, x, y));
                }
            }
        }
        None
    }

    pub fn rank(&self) -> usize {
        let mut m = self.to_dense();
        eliminate(&mut m, None)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<LinMap> {
        let n = self.rows();
        if n != self.cols() {
            return Err(Error::NotInvertible { rank: self.rank(), dim: n.max(self.cols()) });
        }
        let mut m = self.to_dense();
        let mut inv = LinMap::identity(self.field, Space::atom("_", n)).to_dense();
        let rank = eliminate(&mut m, Some(&mut inv));
        if rank < n {
            return Err(Error::NotInvertible { rank, dim: n });
        }
        LinMap::from_dense(self.field, self.codomain.clone(), self.domain.clone(), &inv)
    }
}

fn normalize_column(mut col: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    col.sort_by_key(|(i, _)| *i);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(col.len());
    for (i, v) in col {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Reduced row echelon form in place, mirroring row operations onto `aug`. Returns the rank.
fn eliminate(m: &mut [Vec<Scalar>], mut aug: Option<&mut Vec<Vec<Scalar>>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        if let Some(a) = aug.as_deref_mut() {
            a.swap(rank, p);
        }
        let inv = m[rank][c].inverse().expect("pivot is nonzero");
        scale_row(&mut m[rank], &inv);
        if let Some(a) = aug.as_deref_mut() {
            scale_row(&mut a[rank], &inv);
        }
        for r in 0..rows {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let factor = m[r][c].clone();
            let pivot = m[rank].clone();
            sub_row(&mut m[r], &pivot, &factor);
            if let Some(a) = aug.as_deref_mut() {
                let pivot = a[rank].clone();
                sub_row(&mut a[r], &pivot, &factor);
            }
        }
        rank += 1;
    }
    rank
}

fn scale_row(row: &mut [Scalar], c: &Scalar) {
    for v in row.iter_mut().filter(|v| !v.is_zero()) {
        *v = &*v * c;
    }
}

fn sub_row(row: &mut [Scalar], pivot: &[Scalar], factor: &Scalar) {
    for (v, p) in row.iter_mut().zip(pivot) {
        if !p.is_zero() {
            *v = &*v - &(p * factor);
        }
    }
}
