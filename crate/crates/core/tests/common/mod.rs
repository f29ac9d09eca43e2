//! Oracles shared by the integration tests.
#![allow(dead_code)]

/// Element-level evaluation of the antipode identities in Sweedler form, for `h ∈ H_e`
/// and `g ∈ H_p`, using vectors and structure constants only:
///
/// `S(h_(1,p⁻¹))(h_(2,p) g) = ε(h)g = h_(1,p)(S(h_(2,p⁻¹)) g)`,
/// `(g h_(1,p)) S(h_(2,p⁻¹)) = gε(h) = (g S(h_(1,p⁻¹))) h_(2,p)`.
pub mod sweedler {
    use qbraid::{CrossedGchq, Field, LinMap, Scalar};

    pub type Vector = Vec<Scalar>;

    pub fn basis(field: Field, dim: usize, i: usize) -> Vector {
        (0..dim).map(|j| if i == j { field.one() } else { field.zero() }).collect()
    }

    pub fn apply(m: &LinMap, v: &Vector) -> Vector {
        let mut out = vec![m.field().zero(); m.rows()];
        for (c, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (r, x) in m.column(c) {
                out[*r] = &out[*r] + &(coeff * x);
            }
        }
        out
    }

    pub fn product(mult: &LinMap, a: &Vector, b: &Vector) -> Vector {
        let n = b.len();
        let mut out = vec![mult.field().zero(); mult.rows()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (r, c) in mult.column(i * n + j) {
                    out[*r] = &out[*r] + &(&xy * c);
                }
            }
        }
        out
    }

    /// `Δ_{p,q}(h) = Σ coeff · a ⊗ b` as a list of basis pairs.
    pub fn split(h: &CrossedGchq, p: usize, q: usize, v: &Vector) -> Vec<(Scalar, Vector, Vector)> {
        let dq = h.dim(q);
        let field = h.field();
        apply(h.comult(p, q), v)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, basis(field, h.dim(p), i / dq), basis(field, dq, i % dq)))
            .collect()
    }

    pub fn scale(c: &Scalar, v: &Vector) -> Vector {
        v.iter().map(|x| c * x).collect()
    }

    pub fn add(a: &Vector, b: &Vector) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    /// Failures as `(identity, p, h, g)`.
    pub fn check(h: &CrossedGchq) -> Vec<(&'static str, usize, usize, usize)> {
        let grp = h.group();
        let field = h.field();
        let e = grp.identity();
        let mut bad = Vec::new();
        for p in grp.elements() {
            let pi = grp.inv(p);
            let (mult, s) = (h.mult(p), h.antipode(pi));
            let zero = vec![field.zero(); h.dim(p)];
            for a in 0..h.dim(e) {
                let hv = basis(field, h.dim(e), a);
                let eps = apply(h.counit(), &hv)[0].clone();
                for b in 0..h.dim(p) {
                    let g = basis(field, h.dim(p), b);
                    let expect = scale(&eps, &g);
                    let mut sums = [zero.clone(), zero.clone(), zero.clone(), zero.clone()];
                    for (c, x, y) in split(h, pi, p, &hv) {
                        // x ∈ H_{p⁻¹}, y ∈ H_p
                        let sx = apply(s, &x);
                        let t0 = product(mult, &sx, &product(mult, &y, &g));
                        let t3 = product(mult, &product(mult, &g, &sx), &y);
                        sums[0] = add(&sums[0], &scale(&c, &t0));
                        sums[3] = add(&sums[3], &scale(&c, &t3));
                    }
                    for (c, x, y) in split(h, p, pi, &hv) {
                        // x ∈ H_p, y ∈ H_{p⁻¹}
                        let sy = apply(s, &y);
                        let t1 = product(mult, &x, &product(mult, &sy, &g));
                        let t2 = product(mult, &product(mult, &g, &x), &sy);
                        sums[1] = add(&sums[1], &scale(&c, &t1));
                        sums[2] = add(&sums[2], &scale(&c, &t2));
                    }
                    let names = ["left-a", "left-b", "right-a", "right-b"];
                    for (name, sum) in names.iter().zip(&sums) {
                        if *sum != expect {
                            bad.push((*name, p, a, b));
                        }
                    }
                }
            }
        }
        bad
    }
}
