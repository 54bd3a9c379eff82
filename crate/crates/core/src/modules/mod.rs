//! Jordan modules as families of left multiplication operators.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::exact::matrix::{sparse_rref, to_dense};
use crate::exact::{MatrixQ, Rational, SparseVec, VectorQ};
use crate::jordan::verify::fmt_vec;
use crate::jordan::AlgebraSC;
use crate::random::{rational_vector, seeded};
use crate::report::Check;

/// Basis sizes up to which the linearized `(Lxx2)` and `(Lx3)` identities are
/// checked on all basis triples.
pub const LINEARIZED_MODULE_DIM: usize = 12;

/// A left module `M` over `J`, given by `L_{eᵢ}` for every basis element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleRep {
    pub algebra: AlgebraSC,
    pub carrier: usize,
    pub l: Vec<MatrixQ>,
}

impl ModuleRep {
    pub fn new(algebra: AlgebraSC, l: Vec<MatrixQ>) -> Result<Self> {
        if l.len() != algebra.dim() {
            return Err(AlbertError::Dimension(format!("{} operators for a {}-dimensional algebra", l.len(), algebra.dim())));
        }
        let carrier = l.first().map_or(0, MatrixQ::rows);
        if let Some(bad) = l.iter().position(|m| m.rows() != carrier || m.cols() != carrier) {
            return Err(AlbertError::Dimension(format!("L_{bad} is not {carrier}x{carrier}")));
        }
        Ok(Self { algebra, carrier, l })
    }

    /// The algebra acting on itself.
    pub fn regular(algebra: &AlgebraSC) -> Self {
        free_module(algebra, 1)
    }

    /// `L_x = Σ xᵢ L_{eᵢ}`
    pub fn op(&self, x: &[Rational]) -> MatrixQ {
        let mut acc = MatrixQ::zeros(self.carrier, self.carrier);
        for (c, m) in x.iter().zip(&self.l) {
            if !c.is_zero() {
                acc = acc.lin_comb(&Rational::one(), m, c).expect("same shape");
            }
        }
        acc
    }

    pub fn act(&self, x: &[Rational], phi: &[Rational]) -> VectorQ {
        self.op(x).mul_vec(phi).expect("carrier vector")
    }

    /// `J ⊕ M` with `(x + Φ)(x′ + Φ′) = xx′ + xΦ′ + x′Φ`.
    pub fn split_null_extension(&self) -> Result<AlgebraSC> {
        let (n, m) = (self.algebra.dim(), self.carrier);
        AlgebraSC::from_basis_products(format!("{}+M{}", self.algebra.name(), m), n + m, |i, j| {
            let mut v = vec![Rational::zero(); n + m];
            match (i < n, j < n) {
                (true, true) => {
                    for (k, c) in self.algebra.basis_product(i, j) {
                        v[*k] = c.clone();
                    }
                }
                (true, false) | (false, true) => {
                    let (x, phi) = if i < n { (i, j - n) } else { (j, i - n) };
                    for (k, c) in self.l[x].column(phi).into_iter().enumerate() {
                        v[n + k] = c;
                    }
                }
                (false, false) => {}
            }
            v
        })
    }
}

/// `J ⊗ ℝᵏ` as `k` stacked copies of the regular module: carrier index
/// `copy·n + a`.
pub fn free_module(j: &AlgebraSC, k: usize) -> ModuleRep {
    let n = j.dim();
    let l = j
        .basis_left_mults()
        .into_iter()
        .map(|li| {
            let rows: Vec<SparseVec> = (0..k * n)
                .map(|r| li.row_sparse(r % n).into_iter().map(|(c, x)| (c + (r / n) * n, x)).collect())
                .collect();
            MatrixQ::from_sparse_rows(k * n, rows).expect("consistent shape").with_auto_storage()
        })
        .collect();
    ModuleRep { algebra: j.clone(), carrier: k * n, l }
}

fn lx3(r: &ModuleRep, x: &[Rational]) -> MatrixQ {
    let a = &r.algebra;
    let x2 = a.mul(x, x);
    let x3 = a.mul(&x2, x);
    let (lx, lx2) = (r.op(x), r.op(&x2));
    let lx_sq = lx.mul(&lx).expect("square");
    let t = r.op(&x3).lin_comb(&Rational::one(), &lx2.mul(&lx).expect("square"), &Rational::from_int(-3)).expect("shape");
    t.lin_comb(&Rational::one(), &lx_sq.mul(&lx).expect("square"), &Rational::from_int(2)).expect("shape")
}

fn associator(a: &AlgebraSC, x: &[Rational], z: &[Rational], y: &[Rational]) -> VectorQ {
    let left = a.mul(&a.mul(x, z), y);
    let right = a.mul(x, &a.mul(z, y));
    left.iter().zip(&right).map(|(p, q)| p - q).collect()
}

/// `[[L_x, L_y], L_z] + L_{[x,z,y]} = 0` on all basis triples.
fn intder_witness(r: &ModuleRep) -> Option<String> {
    let a = &r.algebra;
    let n = a.dim();
    // both terms are antisymmetric in (x, y) when J is commutative
    let pairs: Vec<(usize, usize)> = if a.is_commutative() {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    } else {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    };
    pairs.par_iter().find_map_first(|&(i, j)| {
        let c = r.l[i].commutator(&r.l[j]).expect("square");
        (0..n).find_map(|k| {
            let lhs = c.commutator(&r.l[k]).expect("square");
            let assoc = associator(a, &a.basis(i), &a.basis(k), &a.basis(j));
            let total = lhs.add(&r.op(&assoc)).expect("shape");
            (!total.is_zero()).then(|| format!("basis triple ({i}, {j}, {k})"))
        })
    })
}

/// Polarization of `(Lxx2)` and `(Lx3)` at a basis triple `a ≤ b ≤ c`.
fn linearized_witnesses(r: &ModuleRep) -> (Option<String>, Option<String>) {
    let alg = &r.algebra;
    let n = alg.dim();
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|a| (a..n).flat_map(move |b| (b..n).map(move |c| (a, b, c)))).collect();
    let perms = |t: [usize; 3]| [[t[0], t[1], t[2]], [t[0], t[2], t[1]], [t[1], t[0], t[2]], [t[1], t[2], t[0]], [t[2], t[0], t[1]], [t[2], t[1], t[0]]];
    let product = |i: usize, j: usize| to_dense(alg.basis_product(i, j), n);
    let check = |cubic: bool| {
        triples.par_iter().find_map_first(|&(a, b, c)| {
            let mut acc = MatrixQ::zeros(r.carrier, r.carrier);
            for [p, q, s] in perms([a, b, c]) {
                let term = if cubic {
                    let pq = product(p, q);
                    let t = r.op(&alg.mul(&pq, &alg.basis(s)));
                    let t = t.lin_comb(&Rational::one(), &r.op(&pq).mul(&r.l[s]).expect("square"), &Rational::from_int(-3)).expect("shape");
                    let cube = r.l[p].mul(&r.l[q]).and_then(|m| m.mul(&r.l[s])).expect("square");
                    t.lin_comb(&Rational::one(), &cube, &Rational::from_int(2)).expect("shape")
                } else {
                    r.l[p].commutator(&r.op(&product(q, s))).expect("square")
                };
                acc = acc.add(&term).expect("shape");
            }
            (!acc.is_zero()).then(|| format!("basis triple ({a}, {b}, {c})"))
        })
    };
    (check(false), check(true))
}

/// Module axioms in operator form: `(intder)` on basis triples, `(Lxx2)` and
/// `(Lx3)` on random elements (and linearized on basis triples for small
/// algebras), and `L_𝟙 = 1` when `J` is unital.
pub fn check_module_axioms(r: &ModuleRep, trials: usize, seed: u64) -> Vec<Check> {
    let a = &r.algebra;
    let n = a.dim();
    let mut out = vec![Check::from_witness("module-intder", n * n * n, intder_witness(r))];
    let mut rng = seeded(seed);
    let samples: Vec<VectorQ> = (0..trials).map(|_| rational_vector(&mut rng, n)).collect();
    let lxx2 = samples.iter().find(|x| {
        let x2 = a.mul(x, x);
        !r.op(x).commutator(&r.op(&x2)).expect("square").is_zero()
    });
    out.push(Check::from_witness("module-lxx2", trials, lxx2.map(|x| format!("x = {}", fmt_vec(x)))));
    let cubic = samples.iter().find(|x| !lx3(r, x).is_zero());
    out.push(Check::from_witness("module-lx3", trials, cubic.map(|x| format!("x = {}", fmt_vec(x)))));
    if n <= LINEARIZED_MODULE_DIM {
        let (w2, w3) = linearized_witnesses(r);
        let cases = n * (n + 1) * (n + 2) / 6;
        out.push(Check::from_witness("module-lxx2-linearized", cases, w2));
        out.push(Check::from_witness("module-lx3-linearized", cases, w3));
    }
    if let Some(unit) = a.unit() {
        let ok = r.op(unit) == MatrixQ::identity(r.carrier);
        out.push(Check::from_witness("module-unital", 1, (!ok).then(|| "L_1 is not the identity".to_string())));
    }
    out
}

/// Eigenspaces of `L_p` for the eigenvalues `0, ½, 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PierceSplit {
    pub idempotent: VectorQ,
    pub zero: Vec<VectorQ>,
    pub half: Vec<VectorQ>,
    pub one: Vec<VectorQ>,
}

impl PierceSplit {
    /// `(dim M₀, dim M_½, dim M₁)`
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.zero.len(), self.half.len(), self.one.len())
    }
}

/// Pierce decomposition with respect to an idempotent `p`, after checking
/// `L_p(L_p − ½)(L_p − 1) = 0` exactly.
pub fn pierce_decompose(r: &ModuleRep, p: &[Rational]) -> Result<PierceSplit> {
    r.algebra.check_elem(p)?;
    if r.algebra.mul(p, p) != p {
        return Err(AlbertError::InvalidInput(format!("{} is not idempotent", fmt_vec(p))));
    }
    let m = r.carrier;
    let lp = r.op(p);
    let id = MatrixQ::identity(m);
    let shifted = |s: Rational| lp.lin_comb(&Rational::one(), &id, &-s).expect("shape");
    let (l_half, l_one) = (shifted(Rational::half()), shifted(Rational::one()));
    let cubic = lp.mul(&l_half).and_then(|t| t.mul(&l_one))?;
    if !cubic.is_zero() {
        return Err(AlbertError::InvalidInput("L_p(L_p - 1/2)(L_p - 1) ≠ 0: not a Jordan module".into()));
    }
    let split = PierceSplit { idempotent: p.to_vec(), zero: lp.nullspace(), half: l_half.nullspace(), one: l_one.nullspace() };
    let (a, b, c) = split.dims();
    if a + b + c != m {
        return Err(AlbertError::Internal(format!("Pierce dimensions ({a}, {b}, {c}) do not fill {m}")));
    }
    Ok(split)
}

/// Dimension of `{T : [T, L_x] = 0 for all x}`.
pub fn module_commutant(r: &ModuleRep) -> usize {
    let m = r.carrier;
    let rows: Vec<SparseVec> = r
        .l
        .par_iter()
        .flat_map_iter(|li| {
            let cols: Vec<SparseVec> = li.transpose().sparse_rows();
            let rows: Vec<SparseVec> = li.sparse_rows();
            (0..m * m).filter_map(move |idx| {
                let (a, b) = (idx / m, idx % m);
                // (T L − L T)_{ab} = Σ_k T_{ak} L_{kb} − Σ_k L_{ak} T_{kb}
                let mut eq: std::collections::BTreeMap<usize, Rational> = Default::default();
                for (k, x) in &cols[b] {
                    *eq.entry(a * m + k).or_insert_with(Rational::zero) += x;
                }
                for (k, x) in &rows[a] {
                    *eq.entry(k * m + b).or_insert_with(Rational::zero) -= x;
                }
                let row: SparseVec = eq.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                (!row.is_empty()).then_some(row)
            })
        })
        .collect();
    m * m - sparse_rref(m * m, rows).rank()
}

/// The split-null extension must itself pass the Jordan checker.
pub fn extension_check(r: &ModuleRep, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let ext = r.split_null_extension()?;
    Ok(crate::jordan::verify_jordan(&ext, trials, seed).into_iter().map(|c| c.prefixed("extension")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Field;
    use crate::jordan::{albert_algebra, direct_sum, make_hermitian, make_jspin};

    fn all_pass(checks: &[Check]) -> bool {
        checks.iter().all(|c| c.passed)
    }

    #[test]
    fn regular_modules_pass() {
        for a in [make_hermitian(Field::Real, 2).unwrap(), make_jspin(3).unwrap(), make_hermitian(Field::Complex, 3).unwrap()] {
            let r = ModuleRep::regular(&a);
            assert!(all_pass(&check_module_axioms(&r, 5, 1)), "{}", a.name());
            assert!(all_pass(&extension_check(&r, 5, 1).unwrap()), "{}", a.name());
        }
    }

    #[test]
    fn perturbed_module_fails() {
        let a = make_jspin(2).unwrap();
        let mut r = ModuleRep::regular(&a);
        let mut rows = r.l[1].to_rows();
        rows[0][2] = &rows[0][2] + &Rational::one();
        r.l[1] = MatrixQ::from_rows(rows).unwrap();
        let checks = check_module_axioms(&r, 5, 1);
        assert!(!all_pass(&checks));
        assert!(checks.iter().any(|c| !c.passed && c.witness.is_some()));
        assert!(!all_pass(&extension_check(&r, 5, 1).unwrap()));
    }

    #[test]
    fn free_modules() {
        let j = make_jspin(2).unwrap();
        let f = free_module(&j, 3);
        assert_eq!(f.carrier, 9);
        assert!(all_pass(&check_module_axioms(&f, 5, 2)));
        assert_eq!(module_commutant(&f), 9);
        assert_eq!(free_module(&albert_algebra(), 2).carrier, 54);
    }

    #[test]
    fn pierce_splits() {
        let h2 = make_hermitian(Field::Real, 2).unwrap();
        let r = ModuleRep::regular(&h2);
        let e11 = h2.basis(0);
        assert_eq!(pierce_decompose(&r, &e11).unwrap().dims(), (1, 1, 1));
        assert_eq!(pierce_decompose(&r, h2.unit().unwrap()).unwrap().dims(), (0, 0, 3));
        assert!(pierce_decompose(&r, &vec![Rational::from_int(2), Rational::zero(), Rational::zero()]).is_err());
        let a = albert_algebra();
        assert_eq!(pierce_decompose(&ModuleRep::regular(&a), &a.basis(0)).unwrap().dims(), (10, 16, 1));
    }

    #[test]
    fn commutants() {
        let r2 = direct_sum(&[make_hermitian(Field::Real, 1).unwrap(), make_hermitian(Field::Real, 1).unwrap()]).unwrap();
        assert_eq!(module_commutant(&ModuleRep::regular(&r2)), 2);
        assert_eq!(module_commutant(&ModuleRep::regular(&albert_algebra())), 1);
    }
}
