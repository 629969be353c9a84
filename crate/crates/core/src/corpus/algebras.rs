//! Small named algebras used across the corpus and the tests.

use crate::exactla::{FieldSpec, Mat};
use crate::rings::Algebra;

fn labels(names: &[&str]) -> Option<Vec<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

/// `F_4 = F_2[w]/(w^2 + w + 1)` on the basis `{1, w}`.
pub fn f4() -> Algebra {
    let f = FieldSpec::Prime(2);
    let c = [1, 0, 0, 1, 0, 1, 1, 1].iter().map(|&x| f.from_i64(x)).collect();
    Algebra::new(f, 2, c, Some(vec![f.one(), f.zero()]), labels(&["1", "w"]))
}

/// `k[x]/(x^2)` on the basis `{1, x}`.
pub fn dual_numbers(f: FieldSpec) -> Algebra {
    let c = [1, 0, 0, 1, 0, 1, 0, 0].iter().map(|&x| f.from_i64(x)).collect();
    Algebra::new(f, 2, c, Some(vec![f.one(), f.zero()]), labels(&["1", "x"]))
}

fn unit_matrix(f: FieldSpec, n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(f, n, n);
    m.set(i, j, f.one());
    m
}

/// Upper triangular 2x2 matrices on `{E11, E12, E22}`.
pub fn upper_triangular(f: FieldSpec) -> Algebra {
    let basis = [unit_matrix(f, 2, 0, 0), unit_matrix(f, 2, 0, 1), unit_matrix(f, 2, 1, 1)];
    Algebra::from_matrices(f, &basis, labels(&["E11", "E12", "E22"]))
}

/// Matrices `[[a, b], [0, 0]]` on `{e = E11, f = E12}`: firm, without unit.
pub fn row_ring(f: FieldSpec) -> Algebra {
    let basis = [unit_matrix(f, 2, 0, 0), unit_matrix(f, 2, 0, 1)];
    Algebra::from_matrices(f, &basis, labels(&["e", "f"]))
}

/// `k × k` on the idempotents `{e1, e2}`.
pub fn split_pair(f: FieldSpec) -> Algebra {
    let k = Algebra::ground(f);
    Algebra::product(&k, &k).with_labels(vec!["e1".into(), "e2".into()])
}

/// The subalgebra of `M_n(k)` generated by `gens`, optionally with the identity.
/// Returns the algebra and its basis matrices.
pub fn generated_subalgebra(f: FieldSpec, n: usize, gens: &[Mat], with_identity: bool) -> (Algebra, Vec<Mat>) {
    use crate::exactla::Subspace;
    let mut start: Vec<Mat> = gens.to_vec();
    if with_identity {
        start.push(Mat::identity(f, n));
    }
    let to_space = |ms: &[Mat]| {
        if ms.is_empty() {
            return Subspace::zero(f, n * n);
        }
        let rows: Vec<Vec<_>> = ms.iter().map(Mat::vectorize).collect();
        Subspace::from_rows(&Mat::from_rows(f, &rows))
    };
    let mut space = to_space(&start);
    loop {
        let basis: Vec<Mat> =
            (0..space.dim()).map(|i| Mat::unvectorize(f, n, n, space.basis().row(i))).collect();
        let mut all = basis.clone();
        for x in &basis {
            for y in &basis {
                all.push(x.mul(y));
            }
        }
        let next = to_space(&all);
        if next.dim() == space.dim() {
            let alg = Algebra::from_matrices(f, &basis, None);
            return (alg, basis);
        }
        space = next;
    }
}
