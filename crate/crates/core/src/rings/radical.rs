//! Jacobson radical and simple modules of small algebras.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Algebra, RingError, RingHom};
use crate::bimod::Bimodule;
use crate::exactla::{kernel, FieldSpec, Mat, Scalar, Subspace};

const ENUMERATION_LIMIT: u64 = 1 << 13;
const MAX_ROOT_SEARCH_PRIME: u64 = 1 << 17;

fn trace(m: &Mat) -> Scalar {
    let f = m.field();
    (0..m.rows()).fold(f.zero(), |acc, i| f.add(&acc, m.get(i, i)))
}

/// The largest nilpotent two-sided ideal.
///
/// Uses the kernel of the trace form `tr(L_{xy})` in characteristic 0 or above
/// `dim`, and an element enumeration over very small prime fields otherwise.
pub fn jacobson_radical(a: &Algebra) -> Result<Subspace, RingError> {
    if !a.is_unital() {
        return Err(RingError::UnitRequired);
    }
    let f = a.field();
    let n = a.dim();
    let p = f.characteristic();
    let j = if p == 0 || p as usize > n {
        let mut form = Mat::zeros(f, n, n);
        for i in 0..n {
            for k in 0..n {
                let prod = a.mul_vec(&a.basis_vector(i), &a.basis_vector(k));
                form.set(i, k, trace(&a.left_mult_by(&prod)));
            }
        }
        kernel(&form)
    } else if p <= 3 && (p as u32).checked_pow(n as u32).is_some_and(|s| (s as u64) <= ENUMERATION_LIMIT) {
        radical_by_enumeration(a)
    } else {
        return Err(RingError::UnsupportedField(format!("radical of a dim {n} algebra over {f}")));
    };
    debug_assert!(a.is_nilpotent_subspace(&j));
    Ok(j)
}

fn all_vectors(f: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let elems = f.elements().expect("finite field");
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

fn radical_by_enumeration(a: &Algebra) -> Subspace {
    let f = a.field();
    let mut j = Subspace::zero(f, a.dim());
    for v in all_vectors(f, a.dim()) {
        if j.contains(&v) {
            continue;
        }
        let extended = j.sum(&Subspace::from_rows(&Mat::from_rows(f, &[v])));
        let ideal = a.ideal_generated(&extended);
        if a.is_nilpotent_subspace(&ideal) {
            j = ideal;
        }
    }
    j
}

/// Subalgebra on a multiplicatively closed subspace, in its pivot coordinates.
fn subalgebra(a: &Algebra, sub: &Subspace) -> Algebra {
    let n = sub.dim();
    let mut consts = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul_vec(sub.basis().row(i), sub.basis().row(j));
            consts.extend(sub.coords(&prod).expect("subspace closed under products"));
        }
    }
    let unit = a.unit().and_then(|u| sub.coords(u));
    Algebra::new(a.field(), n, consts, unit, None)
}

fn pow(a: &Algebra, x: &[Scalar], mut e: u64) -> Vec<Scalar> {
    let mut acc = a.unit().expect("unital").to_vec();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = a.mul_vec(&acc, &base);
        }
        base = a.mul_vec(&base, &base);
        e >>= 1;
    }
    acc
}

fn sub_vec(f: FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| f.sub(a, b)).collect()
}

fn scale_vec(f: FieldSpec, c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| f.mul(c, a)).collect()
}

/// Eigenvalues in the ground field of multiplication by `x` on the ideal `eZ`.
fn field_roots(z: &Algebra, e: &[Scalar], x: &[Scalar]) -> Result<Vec<Scalar>, RingError> {
    let f = z.field();
    let ez = Subspace::from_columns(&z.left_mult_by(e));
    let xe = z.mul_vec(x, e);
    let singular_at = |c: &Scalar| {
        let shifted = sub_vec(f, &xe, &scale_vec(f, c, e));
        z.left_mult_by(&shifted).mul(&ez.inclusion()).rank() < ez.dim()
    };
    match f {
        FieldSpec::Prime(p) => {
            if p > MAX_ROOT_SEARCH_PRIME {
                return Err(RingError::UnsupportedField(format!("root search over {f}")));
            }
            Ok(f.elements().unwrap().into_iter().filter(|c| singular_at(c)).collect())
        }
        FieldSpec::Rationals => {
            Ok(rational_root_candidates(z, &ez, &xe)?.into_iter().filter(|c| singular_at(c)).collect())
        }
    }
}

/// Rational roots of the minimal polynomial of `L_xe` on `ez`, by the rational root test.
fn rational_root_candidates(z: &Algebra, ez: &Subspace, xe: &[Scalar]) -> Result<Vec<Scalar>, RingError> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let f = z.field();
    let m = ez.retraction().mul(&z.left_mult_by(xe)).mul(&ez.inclusion());
    let d = m.rows();
    if d == 0 {
        return Ok(vec![]);
    }
    // minimal polynomial via the first linear dependence among powers of m
    let mut powers = vec![Mat::identity(f, d).vectorize()];
    let coeffs = loop {
        let next = Mat::unvectorize(f, d, d, powers.last().unwrap()).mul(&m).vectorize();
        let span = Mat::from_columns(f, d * d, &powers);
        if let Some(sol) = span.solve(&Mat::column_vector(f, &next)) {
            let mut c: Vec<Scalar> = sol.column(0).iter().map(|x| f.neg(x)).collect();
            c.push(f.one());
            break c;
        }
        powers.push(next);
    };
    let rats: Vec<BigRational> = coeffs
        .iter()
        .map(|c| match c {
            Scalar::Rat(r) => r.clone(),
            Scalar::Mod(_) => unreachable!(),
        })
        .collect();
    let lcm = rats.iter().fold(BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut out = if lowest > 0 { vec![f.zero()] } else { vec![] };
    let divisors = |n: &BigInt| -> Result<Vec<BigInt>, RingError> {
        let n = n.abs();
        if n > BigInt::from(1_000_000) {
            return Err(RingError::UnsupportedField("rational root search bound exceeded".into()));
        }
        let n: i64 = n.try_into().unwrap();
        Ok((1..=n).filter(|k| n % k == 0).map(BigInt::from).collect())
    };
    for num in divisors(&ints[lowest])? {
        for den in divisors(ints.last().unwrap())? {
            for sign in [1, -1] {
                let r = BigRational::new(num.clone() * sign, den.clone());
                let s = Scalar::Rat(r);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    Ok(out)
}

/// Primitive idempotents of a commutative semisimple algebra over the ground field.
fn primitive_idempotents(z: &Algebra) -> Result<Vec<Vec<Scalar>>, RingError> {
    let f = z.field();
    let splitters: Vec<Vec<Scalar>> = match f {
        FieldSpec::Prime(p) => {
            // the F_p-points of z: kernel of Frobenius minus identity
            let mut frob = Mat::zeros(f, z.dim(), z.dim());
            for i in 0..z.dim() {
                let col = pow(z, &z.basis_vector(i), p);
                for (r, v) in col.into_iter().enumerate() {
                    frob.set(r, i, v);
                }
            }
            let k = kernel(&frob.sub(&Mat::identity(f, z.dim())));
            (0..k.dim()).map(|i| k.basis().row(i).to_vec()).collect()
        }
        FieldSpec::Rationals => (0..z.dim()).map(|i| z.basis_vector(i)).collect(),
    };
    let mut idems = vec![z.unit().unwrap().to_vec()];
    for x in &splitters {
        let mut next = Vec::new();
        for e in &idems {
            let roots = field_roots(z, e, x)?;
            if roots.len() <= 1 {
                next.push(e.clone());
                continue;
            }
            for c in &roots {
                // Lagrange idempotent: e · Π_{c' ≠ c} (x - c') / (c - c')
                let mut acc = e.clone();
                for c2 in roots.iter().filter(|c2| *c2 != c) {
                    let shifted = sub_vec(f, x, &scale_vec(f, c2, z.unit().unwrap()));
                    let denom = f.inv(&f.sub(c, c2)).unwrap();
                    acc = scale_vec(f, &denom, &z.mul_vec(&acc, &shifted));
                }
                next.push(acc);
            }
        }
        idems = next;
    }
    for e in &idems {
        let ez = Subspace::from_columns(&z.left_mult_by(e));
        if f == FieldSpec::Rationals && ez.dim() > 1 {
            return Err(RingError::UnsupportedField("centre does not split over Q".into()));
        }
    }
    Ok(idems)
}

struct Block {
    /// Minimal right ideal of the semisimple quotient.
    simple: Subspace,
    multiplicity: usize,
}

fn blocks(a: &Algebra) -> Result<(Algebra, Mat, Vec<Block>), RingError> {
    let j = jacobson_radical(a)?;
    let (abar, proj) = a.quotient(&j);
    let center = abar.center();
    let z = subalgebra(&abar, &center);
    let idems = primitive_idempotents(&z)?;
    let mut out = Vec::new();
    for e_z in idems {
        let e = center.inclusion().mul_vec(&e_z);
        let block = Subspace::from_columns(&abar.left_mult_by(&e));
        let f_deg = Subspace::from_columns(&z.left_mult_by(&e_z)).dim();
        let ratio = block.dim() / f_deg;
        let n = (1..=ratio).find(|n| n * n == ratio).ok_or_else(|| {
            RingError::UnsupportedField("block is not a full matrix algebra over its centre".into())
        })?;
        let target = n * f_deg;
        let simple = minimal_right_ideal(&abar, &block, target)?;
        out.push(Block { simple, multiplicity: block.dim() / target });
    }
    Ok((abar, proj, out))
}

fn right_ideal_of(a: &Algebra, x: &[Scalar]) -> Subspace {
    Subspace::from_columns(&a.left_mult_by(x))
}

fn minimal_right_ideal(a: &Algebra, block: &Subspace, target: usize) -> Result<Subspace, RingError> {
    let f = a.field();
    let mut current = block.clone();
    while current.dim() > target {
        let mut candidates: Vec<Vec<Scalar>> = Vec::new();
        let exhaustive = f
            .order()
            .and_then(|q| q.checked_pow(current.dim() as u32))
            .is_some_and(|s| s <= ENUMERATION_LIMIT);
        if exhaustive {
            for c in all_vectors(f, current.dim()) {
                candidates.push(current.inclusion().mul_vec(&c));
            }
        } else {
            for i in 0..current.dim() {
                let m = current.basis().row(i).to_vec();
                candidates.push(m.clone());
                for k in 0..a.dim() {
                    candidates.push(a.mul_vec(&m, &a.basis_vector(k)));
                }
            }
        }
        let best = candidates
            .iter()
            .map(|x| right_ideal_of(a, x))
            .filter(|s| !s.is_zero() && s.dim() < current.dim())
            .min_by_key(Subspace::dim);
        match best {
            Some(s) => current = s,
            None => {
                return Err(RingError::UnsupportedField(
                    "no smaller right ideal found in a non-split block".into(),
                ))
            }
        }
    }
    if current.dim() < target {
        return Err(RingError::UnsupportedField("block has a non-commutative division part".into()));
    }
    Ok(current)
}

/// Simple right modules of `a` (through `a/J`), one per isomorphism class.
pub fn simple_right_modules(a: &Arc<Algebra>) -> Result<Vec<Bimodule>, RingError> {
    let (abar, proj, bl) = blocks(a)?;
    let abar = Arc::new(abar);
    let hom = RingHom::new(a.clone(), abar.clone(), proj, true);
    let reg = Bimodule::right_regular(abar);
    bl.iter()
        .map(|b| {
            let (s, _) = reg.submodule(&b.simple).expect("right ideals are stable");
            Ok(s.restrict_right(&hom))
        })
        .collect()
}

/// `(dim S_i, n_i)` with `Σ n_i dim S_i = dim a/J`.
pub fn wedderburn_multiplicities(a: &Algebra) -> Result<Vec<(usize, usize)>, RingError> {
    let (_, _, bl) = blocks(a)?;
    Ok(bl.iter().map(|b| (b.simple.dim(), b.multiplicity)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimod::{check_bimodule, hom_right};
    use crate::testutil::*;

    #[test]
    fn radical_examples() {
        assert!(jacobson_radical(&f4()).unwrap().is_zero());
        let q = FieldSpec::Rationals;
        let ut = upper_triangular(q);
        let j = jacobson_radical(&ut).unwrap();
        assert_eq!(j.dim(), 1);
        // oracle: the strictly upper part squares to zero and is an ideal
        let e12 = ut.basis_vector(1);
        assert!(j.contains(&e12));
        let d = dual_numbers(FieldSpec::Prime(5));
        let j = jacobson_radical(&d).unwrap();
        assert_eq!(j.basis(), &Mat::from_i64(FieldSpec::Prime(5), &[&[0, 1]]));
        // small characteristic goes through enumeration
        let d2 = dual_numbers(f2());
        assert_eq!(jacobson_radical(&d2).unwrap().dim(), 1);
        let ut3 = upper_triangular(f3());
        assert_eq!(jacobson_radical(&ut3).unwrap().dim(), 1);
    }

    #[test]
    fn radical_quotient_is_semisimple() {
        for a in [upper_triangular(f2()), dual_numbers(f3()), upper_triangular(FieldSpec::Rationals)] {
            let j = jacobson_radical(&a).unwrap();
            let (q, _) = a.quotient(&j);
            assert!(jacobson_radical(&q).unwrap().is_zero());
        }
    }

    #[test]
    fn simple_module_examples() {
        let k = Arc::new(Algebra::ground(f2()));
        let s = simple_right_modules(&k).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dim(), 1);
        let f = f2();
        let kk = Arc::new(Algebra::product(&Algebra::ground(f), &Algebra::ground(f)));
        let s = simple_right_modules(&kk).unwrap();
        assert_eq!(s.iter().map(Bimodule::dim).collect::<Vec<_>>(), vec![1, 1]);
        // pairwise non-isomorphic: no nonzero maps between them
        assert_eq!(hom_right(&s[0], &s[1]).dim(), 0);
        let m2 = Arc::new(Algebra::matrix_algebra(f3(), 2));
        let s = simple_right_modules(&m2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dim(), 2);
        assert!(check_bimodule(&s[0]).is_empty());
        assert_eq!(wedderburn_multiplicities(&m2).unwrap(), vec![(2, 2)]);
    }

    #[test]
    fn wedderburn_accounts_for_dimension() {
        for a in [f4(), upper_triangular(f3()), Algebra::matrix_algebra(FieldSpec::Rationals, 2), dual_numbers(f2())] {
            let j = jacobson_radical(&a).unwrap();
            let total: usize = wedderburn_multiplicities(&a).unwrap().iter().map(|(d, n)| d * n).sum();
            assert_eq!(total, a.dim() - j.dim());
        }
    }

    #[test]
    fn non_split_centre_over_q() {
        // Q(i) as a 2-dim algebra: i^2 = -1
        let q = FieldSpec::Rationals;
        let c = [1, 0, 0, 1, 0, 1, -1, 0].iter().map(|&x| q.from_i64(x)).collect();
        let a = Arc::new(Algebra::new(q, 2, c, Some(vec![q.one(), q.zero()]), None));
        assert!(matches!(simple_right_modules(&a), Err(RingError::UnsupportedField(_))));
    }
}
