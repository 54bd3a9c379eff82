//! The SU(3)-space `ℂ³`: hermitian product, volume form and the antilinear
//! vector product.

use crate::exact::{GaussianRational, Rational};

pub type C3 = [GaussianRational; 3];

pub fn zero3() -> C3 {
    [GaussianRational::zero(), GaussianRational::zero(), GaussianRational::zero()]
}

/// Standard basis vector `e_k`, `k ∈ {0,1,2}`.
pub fn unit3(k: usize) -> C3 {
    let mut v = zero3();
    v[k] = GaussianRational::one();
    v
}

/// Levi-Civita symbol on `{0,1,2}`.
pub fn epsilon(k: usize, l: usize, m: usize) -> i64 {
    match (k, l, m) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `⟨Z₁, Z₂⟩ = Σ conj(Z₁ᵏ) Z₂ᵏ`, antilinear in the first slot.
pub fn inner(a: &C3, b: &C3) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for k in 0..3 {
        acc += &(&a[k].conj() * &b[k]);
    }
    acc
}

/// `v(Z₁,Z₂,Z₃) = ε_{kℓm} Z₁ᵏ Z₂ˡ Z₃ᵐ`, i.e. the determinant of the columns.
pub fn volume(a: &C3, b: &C3, c: &C3) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for k in 0..3 {
        for l in 0..3 {
            for m in 0..3 {
                let e = epsilon(k, l, m);
                if e != 0 {
                    let t = &(&a[k] * &b[l]) * &c[m];
                    acc += &t.scale(&Rational::from_int(e));
                }
            }
        }
    }
    acc
}

/// `(Z₁ ⨯ Z₂)ᵏ = ε_{kℓm} conj(Z₁ˡ) conj(Z₂ᵐ)`.
pub fn vartimes(a: &C3, b: &C3) -> C3 {
    let (a, b) = (conj3(a), conj3(b));
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn conj3(a: &C3) -> C3 {
    [a[0].conj(), a[1].conj(), a[2].conj()]
}

pub fn add3(a: &C3, b: &C3) -> C3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub3(a: &C3, b: &C3) -> C3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn neg3(a: &C3) -> C3 {
    [-&a[0], -&a[1], -&a[2]]
}

/// Complex scalar times vector.
pub fn cscale3(s: &GaussianRational, a: &C3) -> C3 {
    [s * &a[0], s * &a[1], s * &a[2]]
}

pub fn norm_sqr3(a: &C3) -> Rational {
    a.iter().map(GaussianRational::norm_sqr).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn vartimes_examples() {
        assert_eq!(vartimes(&unit3(0), &unit3(1)), unit3(2));
        let z = [gi(1, 2), gi(-3, 1), gi(0, 5)];
        assert_eq!(vartimes(&z, &z), zero3());
        let ie1 = cscale3(&GaussianRational::i(), &unit3(0));
        assert_eq!(vartimes(&ie1, &unit3(1)), cscale3(&gi(0, -1), &unit3(2)));
    }

    #[test]
    fn volume_of_standard_basis() {
        assert_eq!(volume(&unit3(0), &unit3(1), &unit3(2)), GaussianRational::one());
    }

    #[test]
    fn vartimes_pairs_with_volume() {
        let a = [gi(1, 2), gi(-3, 1), gi(0, 5)];
        let b = [gi(2, -1), gi(1, 1), gi(-4, 0)];
        let c = [gi(0, 3), gi(7, -2), gi(1, 1)];
        assert_eq!(inner(&vartimes(&a, &b), &c), volume(&a, &b, &c));
    }
}
