//! Constructors for the Euclidean Jordan algebras and a few controls.

use super::algebra::AlgebraSC;
use crate::composition::Field;
use crate::error::{AlbertError, Result};
use crate::exact::matrix::{vec_add, vec_scale, zero_vector};
use crate::exact::{Rational, VectorQ};

/// A matrix with division-algebra entries, stored as real coordinate vectors.
type KMatrix = Vec<Vec<VectorQ>>;

/// Basis of `H_n(K)`: the diagonal units `E_ii`, then for each `i < j` (in
/// lexicographic order) and each unit `u` of `K` the element `u E_ij + ū E_ji`.
pub fn hermitian_basis_labels(field: Field, n: usize) -> Vec<HermitianSlot> {
    let mut out: Vec<HermitianSlot> = (0..n).map(HermitianSlot::Diagonal).collect();
    for i in 0..n {
        for j in i + 1..n {
            for u in 0..field.dim() {
                out.push(HermitianSlot::OffDiagonal { i, j, unit: u });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermitianSlot {
    Diagonal(usize),
    OffDiagonal { i: usize, j: usize, unit: usize },
}

pub fn hermitian_dim(field: Field, n: usize) -> usize {
    n + field.dim() * n * (n.saturating_sub(1)) / 2
}

fn slot_matrix(field: Field, n: usize, slot: HermitianSlot) -> KMatrix {
    let d = field.dim();
    let mut m = vec![vec![zero_vector(d); n]; n];
    match slot {
        HermitianSlot::Diagonal(i) => m[i][i] = field.unit(0),
        HermitianSlot::OffDiagonal { i, j, unit } => {
            m[i][j] = field.unit(unit);
            m[j][i] = field.conj(&field.unit(unit));
        }
    }
    m
}

fn kmat_mul(field: Field, a: &KMatrix, b: &KMatrix) -> KMatrix {
    let n = a.len();
    let d = field.dim();
    let mut out = vec![vec![zero_vector(d); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].iter().all(Rational::is_zero) {
                continue;
            }
            for j in 0..n {
                if b[k][j].iter().all(Rational::is_zero) {
                    continue;
                }
                out[i][j] = vec_add(&out[i][j], &field.mul(&a[i][k], &b[k][j]));
            }
        }
    }
    out
}

/// Coordinates of a hermitian `K`-matrix in the basis of
/// [`hermitian_basis_labels`].
pub fn hermitian_coords(field: Field, m: &KMatrix) -> VectorQ {
    let n = m.len();
    hermitian_basis_labels(field, n)
        .into_iter()
        .map(|s| match s {
            HermitianSlot::Diagonal(i) => m[i][i][0].clone(),
            HermitianSlot::OffDiagonal { i, j, unit } => m[i][j][unit].clone(),
        })
        .collect()
}

/// The hermitian `K`-matrix with the given coordinates.
pub fn hermitian_matrix(field: Field, n: usize, x: &[Rational]) -> KMatrix {
    let d = field.dim();
    let mut m = vec![vec![zero_vector(d); n]; n];
    for (s, c) in hermitian_basis_labels(field, n).into_iter().zip(x) {
        let piece = slot_matrix(field, n, s);
        for i in 0..n {
            for j in 0..n {
                if piece[i][j].iter().any(|v| !v.is_zero()) {
                    m[i][j] = vec_add(&m[i][j], &vec_scale(&piece[i][j], c));
                }
            }
        }
    }
    m
}

/// `H_n(K)` with the product `½(AB + BA)`, computed entrywise with the
/// division-algebra product.
pub fn make_hermitian(field: Field, n: usize) -> Result<AlgebraSC> {
    if n == 0 {
        return Err(AlbertError::InvalidInput("hermitian matrices need n ≥ 1".into()));
    }
    if field == Field::Octonion && n >= 4 {
        return Err(AlbertError::InvalidInput(format!(
            "H_{n}(O) is not a Jordan algebra for n ≥ 4: octonionic hermitian matrices are Jordan only up to n = 3"
        )));
    }
    let labels = hermitian_basis_labels(field, n);
    let mats: Vec<KMatrix> = labels.iter().map(|s| slot_matrix(field, n, *s)).collect();
    let half = Rational::half();
    let name = format!("H{n}({})", field.symbol());
    AlgebraSC::from_basis_products(name, labels.len(), |a, b| {
        let ab = kmat_mul(field, &mats[a], &mats[b]);
        let ba = kmat_mul(field, &mats[b], &mats[a]);
        let sym: KMatrix = ab
            .iter()
            .zip(&ba)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| vec_scale(&vec_add(x, y), &half)).collect())
            .collect();
        debug_assert!((0..n).all(|i| sym[i][i][1..].iter().all(Rational::is_zero)), "diagonal must be real");
        hermitian_coords(field, &sym)
    })
}

/// The Albert algebra `H₃(𝕆)`.
pub fn albert_algebra() -> AlgebraSC {
    make_hermitian(Field::Octonion, 3).expect("n = 3 is allowed").renamed("J8_3")
}

/// Spin factor `ℝ𝟙 ⊕ ℝⁿ` with `(r𝟙⊕v)(r′𝟙⊕v′) = (rr′+⟨v,v′⟩)𝟙 ⊕ (rv′+r′v)`
/// for the diagonal form with the given entries. Basis: `𝟙, v₁, …, vₙ`.
pub fn make_spin_factor(form: &[Rational]) -> Result<AlgebraSC> {
    let n = form.len();
    let name = if form.iter().all(Rational::is_one) {
        format!("JSpin{n}")
    } else {
        format!("JSpin({})", form.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(","))
    };
    AlgebraSC::from_basis_products(name, n + 1, |i, j| {
        let mut v = zero_vector(n + 1);
        match (i, j) {
            (0, k) | (k, 0) => v[k] = Rational::one(),
            (a, b) if a == b => v[0] = form[a - 1].clone(),
            _ => {}
        }
        v
    })
}

pub fn make_jspin(n: usize) -> Result<AlgebraSC> {
    if n == 0 {
        return Err(AlbertError::InvalidInput("JSpin_n needs n ≥ 1".into()));
    }
    make_spin_factor(&vec![Rational::one(); n])
}

/// Block direct sum; basis is the concatenation of the summands' bases.
pub fn direct_sum(parts: &[AlgebraSC]) -> Result<AlgebraSC> {
    if parts.is_empty() {
        return Err(AlbertError::InvalidInput("direct sum of no algebras".into()));
    }
    let offsets: Vec<usize> = parts.iter().scan(0, |acc, p| {
        let o = *acc;
        *acc += p.dim();
        Some(o)
    }).collect();
    let dim: usize = parts.iter().map(AlgebraSC::dim).sum();
    let name = parts.iter().map(|p| p.name().to_string()).collect::<Vec<_>>().join("+");
    let locate = |i: usize| {
        let b = offsets.iter().rposition(|o| *o <= i).expect("offset 0 exists");
        (b, i - offsets[b])
    };
    AlgebraSC::from_basis_products(name, dim, |i, j| {
        let mut v = zero_vector(dim);
        let ((bi, li), (bj, lj)) = (locate(i), locate(j));
        if bi == bj {
            for (k, c) in parts[bi].basis_product(li, lj) {
                v[offsets[bi] + k] = c.clone();
            }
        }
        v
    })
}

/// The division algebra itself as a real algebra, with its own product.
pub fn division_algebra(field: Field) -> AlgebraSC {
    let d = field.dim();
    AlgebraSC::from_basis_products(field.symbol(), d, |i, j| field.mul(&field.unit(i), &field.unit(j)))
        .expect("consistent")
}

/// The associative algebra `M_n(K)` for `K ∈ {ℝ, ℂ, ℍ}` as a real algebra.
/// Basis index `(i·n + j)·d + u` stands for `u E_ij`.
pub fn matrix_algebra(field: Field, n: usize) -> Result<AlgebraSC> {
    if field == Field::Octonion {
        return Err(AlbertError::InvalidInput("octonionic matrices do not form an associative algebra".into()));
    }
    let d = field.dim();
    let dim = n * n * d;
    AlgebraSC::from_basis_products(format!("M{n}({})", field.symbol()), dim, |a, b| {
        let (ia, ja, ua) = (a / d / n, (a / d) % n, a % d);
        let (ib, jb, ub) = (b / d / n, (b / d) % n, b % d);
        let mut v = zero_vector(dim);
        if ja == ib {
            let p = field.mul(&field.unit(ua), &field.unit(ub));
            for (u, c) in p.into_iter().enumerate() {
                v[(ia * n + jb) * d + u] = c;
            }
        }
        v
    })
}

/// The hermitian basis of `H_n(K)` expressed in the coordinates of
/// [`matrix_algebra`], in the order of [`hermitian_basis_labels`].
pub fn hermitian_in_matrix_algebra(field: Field, n: usize) -> Vec<VectorQ> {
    let d = field.dim();
    hermitian_basis_labels(field, n)
        .into_iter()
        .map(|s| {
            let m = slot_matrix(field, n, s);
            let mut v = zero_vector(n * n * d);
            for i in 0..n {
                for j in 0..n {
                    for u in 0..d {
                        v[(i * n + j) * d + u] = m[i][j][u].clone();
                    }
                }
            }
            v
        })
        .collect()
}

/// Commutative unital 3-dimensional algebra with `a² = b`, `ab = a`,
/// `b² = 0` (basis `𝟙, a, b`). For `x = a`: `x²x² = 0` but `x⁴ = b`, so it is
/// not power associative.
pub fn non_power_associative_example() -> AlgebraSC {
    AlgebraSC::from_basis_products("npa3", 3, |i, j| {
        let mut v = zero_vector(3);
        match (i.min(j), i.max(j)) {
            (0, k) => v[k] = Rational::one(),
            (1, 1) => v[2] = Rational::one(),
            (1, 2) => v[1] = Rational::one(),
            _ => {}
        }
        v
    })
    .expect("consistent")
}

/// A unital algebra with seeded random integer products among the non-unit
/// basis vectors. Generically neither associative nor alternative.
pub fn random_unital_algebra(dim: usize, seed: u64) -> AlgebraSC {
    use rand::Rng;
    let mut rng = crate::random::seeded(seed);
    let table: Vec<Vec<VectorQ>> = (0..dim)
        .map(|_| (0..dim).map(|_| (0..dim).map(|_| Rational::from_int(rng.gen_range(-2..=2))).collect()).collect())
        .collect();
    AlgebraSC::from_basis_products(format!("random{dim}#{seed}"), dim, |i, j| {
        let mut v = zero_vector(dim);
        match (i, j) {
            (0, k) | (k, 0) => v[k] = Rational::one(),
            _ => v = table[i][j].clone(),
        }
        v
    })
    .expect("consistent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(make_hermitian(Field::Octonion, 3).unwrap().dim(), 27);
        assert_eq!(make_hermitian(Field::Real, 1).unwrap().dim(), 1);
        assert_eq!(make_hermitian(Field::Complex, 3).unwrap().dim(), 9);
        assert_eq!(make_hermitian(Field::Quaternion, 2).unwrap().dim(), 6);
        assert!(make_hermitian(Field::Octonion, 4).is_err());
        assert_eq!(make_jspin(9).unwrap().dim(), 10);
        assert_eq!(make_hermitian(Field::Octonion, 2).unwrap().dim(), 10);
    }

    #[test]
    fn hermitian_unit_is_identity_matrix() {
        let a = make_hermitian(Field::Quaternion, 3).unwrap();
        let mut u = zero_vector(a.dim());
        for i in 0..3 {
            u[i] = Rational::one();
        }
        assert_eq!(a.unit(), Some(&u));
        assert!(a.is_commutative());
    }

    #[test]
    fn spin_vector_squares_to_unit() {
        let a = make_jspin(3).unwrap();
        let v = a.basis(2);
        assert_eq!(a.mul(&v, &v), a.basis(0));
    }

    #[test]
    fn jspin1_has_two_characters() {
        // (𝟙 ± v)/2 are orthogonal idempotents
        let a = make_jspin(1).unwrap();
        let h = Rational::half();
        let p = vec![h.clone(), h.clone()];
        let m = vec![h.clone(), -&h];
        assert_eq!(a.mul(&p, &p), p);
        assert_eq!(a.mul(&m, &m), m);
        assert_eq!(a.mul(&p, &m), a.zero());
    }

    #[test]
    fn jordanized_matrices_restrict_to_hermitian() {
        for (field, n) in [(Field::Real, 2), (Field::Complex, 3)] {
            let j = matrix_algebra(field, n).unwrap().jordanize().unwrap();
            let sub = j.subalgebra("herm", hermitian_in_matrix_algebra(field, n)).unwrap();
            assert_eq!(sub.sc(), make_hermitian(field, n).unwrap().sc());
        }
    }

    #[test]
    fn direct_sum_unit() {
        let s = direct_sum(&[make_hermitian(Field::Real, 1).unwrap(), make_jspin(2).unwrap()]).unwrap();
        assert_eq!(s.dim(), 4);
        let mut u = zero_vector(4);
        u[0] = Rational::one();
        u[1] = Rational::one();
        assert_eq!(s.unit(), Some(&u));
    }
}
