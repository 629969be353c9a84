use std::sync::Arc;

use crate::exactla::{kernel, Mat, Scalar, Subspace};
use crate::rings::{simple_right_modules, Algebra, RingError};

use super::{hom_right, induced_map, tensor_over, BimodError, Bimodule, BimoduleMap};

/// `M ⊗ A -> M` (or `A ⊗ M -> M`) together with its inverse.
#[derive(Clone, Debug)]
pub struct FirmData {
    pub tensor: Bimodule,
    pub mult: Mat,
    pub d: Mat,
}

/// Right firmness: `M ⊗_A A -> M` is bijective.
pub fn is_firm_module(m: &Bimodule) -> Option<FirmData> {
    let a = m.right().clone();
    let reg = Bimodule::regular(a.clone());
    let t = tensor_over(m, &reg).expect("same algebra by construction");
    let mut cols = Vec::with_capacity(m.dim() * a.dim());
    for i in 0..m.dim() {
        for j in 0..a.dim() {
            cols.push(m.right_act(j).column(i));
        }
    }
    let flat = Mat::from_columns(m.field(), m.dim(), &cols);
    let mult = flat.mul(t.tensor_info().unwrap().section());
    let d = mult.inverse()?;
    Some(FirmData { tensor: t, mult, d })
}

/// Left firmness: `B ⊗_B M -> M` is bijective.
pub fn is_firm_left_module(m: &Bimodule) -> Option<FirmData> {
    let b = m.left().clone();
    let reg = Bimodule::regular(b.clone());
    let t = tensor_over(&reg, m).expect("same algebra by construction");
    let mut cols = Vec::with_capacity(m.dim() * b.dim());
    for j in 0..b.dim() {
        for i in 0..m.dim() {
            cols.push(m.left_act(j).column(i));
        }
    }
    let flat = Mat::from_columns(m.field(), m.dim(), &cols);
    let mult = flat.mul(t.tensor_info().unwrap().section());
    let d = mult.inverse()?;
    Some(FirmData { tensor: t, mult, d })
}

/// `ker(f - g)` with inherited actions, and its inclusion into the source.
pub fn equalizer_in_mod(
    f: &BimoduleMap,
    g: &BimoduleMap,
) -> Result<(Bimodule, BimoduleMap), BimodError> {
    assert_eq!(f.matrix.rows(), g.matrix.rows());
    assert_eq!(f.matrix.cols(), g.matrix.cols());
    let k = kernel(&f.matrix.sub(&g.matrix));
    let (sub, incl) = f.source.submodule(&k)?;
    Ok((sub.clone(), BimoduleMap::new(sub, f.source.clone(), incl)))
}

/// A finite dual basis `{(e_i, e_i*)}` for a right module.
#[derive(Clone, Debug)]
pub struct DualBasis {
    pub elements: Vec<Vec<Scalar>>,
    /// `e_i*` as matrices `Σ -> A`.
    pub functionals: Vec<Mat>,
}

impl DualBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `Σ_i e_i · e_i*(u) = u` on every basis vector `u`.
    pub fn is_valid(&self, sigma: &Bimodule) -> bool {
        (0..sigma.dim()).all(|u| {
            let mut acc = vec![sigma.field().zero(); sigma.dim()];
            for (e, phi) in self.elements.iter().zip(&self.functionals) {
                let coeff = phi.column(u);
                let term = sigma.right_act_by(&coeff).mul_vec(e);
                acc = acc.iter().zip(&term).map(|(x, y)| sigma.field().add(x, y)).collect();
            }
            acc == Mat::unit_column(sigma.field(), sigma.dim(), u).column(0)
        })
    }
}

fn split_on_generators(sigma: &Bimodule, gens: &[usize]) -> Option<DualBasis> {
    let a = sigma.right();
    let f = sigma.field();
    let (ds, da, n) = (sigma.dim(), a.dim(), gens.len());
    let free = Bimodule::free_right(a.clone(), n);
    let mut pcols = Vec::with_capacity(n * da);
    for &g in gens {
        for j in 0..da {
            pcols.push(sigma.right_act(j).column(g));
        }
    }
    let p = Mat::from_columns(f, ds, &pcols);
    // unknown: vec(s) for s: Σ -> A^n, right A-linear with p·s = id
    let is = Mat::identity(f, ds);
    let ifree = Mat::identity(f, n * da);
    let mut blocks = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..da {
        blocks.push(ifree.kron(&sigma.right_act(x).transpose()).sub(&free.right_act(x).kron(&is)));
        rhs.push(Mat::zeros(f, n * da * ds, 1));
    }
    blocks.push(p.kron(&is));
    rhs.push(Mat::column_vector(f, &is.vectorize()));
    let lhs: Vec<&Mat> = blocks.iter().collect();
    let rhs: Vec<&Mat> = rhs.iter().collect();
    let sol = Mat::vstack(&lhs).solve(&Mat::vstack(&rhs))?;
    let s = Mat::unvectorize(f, n * da, ds, &sol.column(0));
    let elements = gens.iter().map(|&g| Mat::unit_column(f, ds, g).column(0)).collect();
    let functionals =
        (0..n).map(|i| s.select_rows(&(i * da..(i + 1) * da).collect::<Vec<_>>())).collect();
    Some(DualBasis { elements, functionals })
}

/// Splits a surjection `A^n -> Σ` when possible, trying the smallest sets of
/// basis generators first.
pub fn is_fg_projective(sigma: &Bimodule) -> Option<DualBasis> {
    if !sigma.right().is_unital() {
        return None;
    }
    let ds = sigma.dim();
    if ds == 0 {
        return Some(DualBasis { elements: vec![], functionals: vec![] });
    }
    let mut tried = 0usize;
    for size in 1..ds {
        for gens in combinations(ds, size) {
            tried += 1;
            if tried > 256 {
                break;
            }
            if let Some(db) = split_on_generators(sigma, &gens) {
                return Some(db);
            }
        }
    }
    split_on_generators(sigma, &(0..ds).collect::<Vec<_>>())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Nonzero {0,1}-combinations of the rows of `basis`: all of them for at most
/// eight rows, otherwise singletons and pairs.
pub(crate) fn binary_combinations(basis: &Mat) -> Vec<Vec<Scalar>> {
    let f = basis.field();
    let n = basis.rows();
    let add = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| f.add(a, b)).collect()
    };
    let mut out = Vec::new();
    if n <= 8 {
        for mask in 1u32..(1 << n) {
            let mut v = vec![f.zero(); basis.cols()];
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    v = add(&v, basis.row(i));
                }
            }
            out.push(v);
        }
    } else {
        for i in 0..n {
            out.push(basis.row(i).to_vec());
        }
        for i in 0..n {
            for j in i + 1..n {
                out.push(add(basis.row(i), basis.row(j)));
            }
        }
    }
    out
}

/// Inclusions of the cyclic submodules `vB ⊆ B²`, deduplicated, zero omitted.
pub fn default_flat_probes(b: &Arc<Algebra>) -> Vec<BimoduleMap> {
    let b2 = Bimodule::free_right(b.clone(), 2);
    let ident = Mat::identity(b.field(), b2.dim());
    let mut seen: Vec<Subspace> = Vec::new();
    let mut out = Vec::new();
    for v in binary_combinations(&ident) {
        let cols: Vec<Vec<Scalar>> = (0..b.dim()).map(|j| b2.right_act(j).mul_vec(&v)).collect();
        let sub = Subspace::from_columns(&Mat::from_columns(b.field(), b2.dim(), &cols));
        if sub.is_zero() || seen.contains(&sub) {
            continue;
        }
        seen.push(sub.clone());
        let (m, incl) = b2.submodule(&sub).expect("cyclic submodules are stable");
        out.push(BimoduleMap::new(m, b2.clone(), incl));
    }
    out
}

fn tensored_rank(f: &BimoduleMap, sigma: &Bimodule) -> (usize, usize, usize) {
    let src = tensor_over(&f.source, sigma).expect("probe over the acting algebra");
    let dst = tensor_over(&f.target, sigma).expect("probe over the acting algebra");
    let m = induced_map(&f.matrix, &sigma.identity(), &src, &dst).expect("module maps are balanced");
    (m.rank(), src.dim(), dst.dim())
}

/// Every probe stays injective after `- ⊗_B Σ`; the default probes are always included.
pub fn is_flat(b: &Arc<Algebra>, sigma: &Bimodule, extra: &[BimoduleMap]) -> bool {
    default_flat_probes(b).iter().chain(extra).all(|f| {
        let (rank, src, _) = tensored_rank(f, sigma);
        rank == src
    })
}

/// Flat, and no simple right `B`-module is killed by `- ⊗_B Σ`.
///
/// Without a unit the simple modules are replaced by the firm cyclic probes.
pub fn is_faithfully_flat(b: &Arc<Algebra>, sigma: &Bimodule) -> Result<bool, RingError> {
    if !is_flat(b, sigma, &[]) {
        return Ok(false);
    }
    let tests: Vec<Bimodule> = if b.is_unital() {
        simple_right_modules(b)?
    } else {
        default_flat_probes(b)
            .into_iter()
            .map(|p| p.source)
            .filter(|m| is_firm_module(m).is_some())
            .collect()
    };
    Ok(tests.iter().all(|s| tensor_over(s, sigma).map(|t| t.dim() > 0).unwrap_or(false)))
}

/// {0,1}-combinations of Hom bases between `B`, `B²` and the simple modules.
pub fn default_reflection_probes(b: &Arc<Algebra>) -> Result<Vec<BimoduleMap>, RingError> {
    let mut objects = vec![Bimodule::right_regular(b.clone()), Bimodule::free_right(b.clone(), 2)];
    if b.is_unital() {
        objects.extend(simple_right_modules(b)?);
    }
    let mut out = Vec::new();
    for y in &objects {
        for y2 in &objects {
            let h = hom_right(y, y2);
            out.push(BimoduleMap::new(y.clone(), y2.clone(), Mat::zeros(b.field(), y2.dim(), y.dim())));
            for c in binary_combinations(&Mat::identity(b.field(), h.dim())) {
                out.push(BimoduleMap::new(y.clone(), y2.clone(), h.map_of(&c)));
            }
        }
    }
    Ok(out)
}

/// For every probe `f`: `f ⊗ Σ` invertible implies `f` invertible.
pub fn reflects_isos_probe(sigma: &Bimodule, probes: &[BimoduleMap]) -> bool {
    probes.iter().all(|f| {
        let (rank, src, dst) = tensored_rank(f, sigma);
        let tensored_iso = src == dst && rank == src;
        !tensored_iso || f.is_iso()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::rings::RingHom;
    use crate::testutil::*;

    fn first_factor(f: FieldSpec) -> (Arc<Algebra>, Bimodule) {
        let b = Arc::new(Algebra::product(&Algebra::ground(f), &Algebra::ground(f)));
        let k = Arc::new(Algebra::ground(f));
        // e1 acts as 1, e2 as 0
        let acts = vec![Mat::from_i64(f, &[&[1]]), Mat::from_i64(f, &[&[0]])];
        let sigma = Bimodule::with_dim(b.clone(), k, 1, acts, vec![Mat::identity(f, 1)], None);
        (b, sigma)
    }

    #[test]
    fn firm_modules() {
        let a = Arc::new(f4());
        assert!(is_firm_module(&Bimodule::right_regular(a.clone())).is_some());
        let f = f2();
        let null = Arc::new(Algebra::new(f, 1, vec![f.zero()], None, None));
        let m = Bimodule::right_regular(null);
        assert!(is_firm_module(&m).is_none());
        let r = Arc::new(row_ring(f));
        let left = is_firm_left_module(&Bimodule::left_regular(r.clone())).expect("left firm");
        assert!(left.mult.mul(&left.d).is_identity());
        assert!(is_firm_module(&Bimodule::right_regular(r)).is_some());
    }

    #[test]
    fn equalizers() {
        let a = Arc::new(f4());
        let m = Bimodule::right_regular(a);
        let id = BimoduleMap::identity(&m);
        let (e, _) = equalizer_in_mod(&id, &id).unwrap();
        assert_eq!(e.dim(), 2);
        let zero = BimoduleMap::new(m.clone(), m.clone(), Mat::zeros(f2(), 2, 2));
        let (e, _) = equalizer_in_mod(&id, &zero).unwrap();
        assert_eq!(e.dim(), 0);
    }

    #[test]
    fn projectivity() {
        let a = Arc::new(f4());
        let db = is_fg_projective(&Bimodule::right_regular(a.clone())).unwrap();
        assert_eq!(db.len(), 1);
        assert!(db.is_valid(&Bimodule::right_regular(a.clone())));
        let q = FieldSpec::Rationals;
        let v = Bimodule::vector_space(q, 2);
        let db = is_fg_projective(&v).unwrap();
        assert_eq!(db.len(), 2);
        assert!(db.is_valid(&v));
        // F4 acting on itself through Frobenius: x·a = a^2 x
        let frob = RingHom::new(a.clone(), a.clone(), Mat::from_i64(f2(), &[&[1, 1], &[0, 1]]), true);
        assert!(crate::rings::check_hom(&frob).is_empty());
        let twisted = Bimodule::right_regular(a).restrict_right(&frob);
        assert!(crate::bimod::check_bimodule(&twisted).is_empty());
        let db = is_fg_projective(&twisted).unwrap();
        assert!(db.is_valid(&twisted));
    }

    #[test]
    fn non_projective_module() {
        // k = B/(x) over the dual numbers is not projective
        let f = f3();
        let b = Arc::new(dual_numbers(f));
        let k = Bimodule::right_regular(b.clone()).quotient_module(&Subspace::from_rows(&Mat::from_i64(f, &[&[0, 1]]))).unwrap().0;
        assert!(is_fg_projective(&k).is_none());
    }

    #[test]
    fn flatness() {
        let f = FieldSpec::Prime(5);
        let b = Arc::new(dual_numbers(f));
        assert!(is_flat(&b, &Bimodule::regular(b.clone()), &[]));
        // Σ = k with x acting as zero, as a (B, k)-bimodule
        let k = Arc::new(Algebra::ground(f));
        let acts = vec![Mat::from_i64(f, &[&[1]]), Mat::from_i64(f, &[&[0]])];
        let sigma = Bimodule::with_dim(b.clone(), k, 1, acts, vec![Mat::identity(f, 1)], None);
        assert!(!is_flat(&b, &sigma, &[]));
    }

    #[test]
    fn faithful_flatness() {
        let f = f2();
        let a = Arc::new(f4());
        assert!(is_faithfully_flat(&a, &Bimodule::regular(a.clone())).unwrap());
        let (b, sigma) = first_factor(f);
        assert!(is_flat(&b, &sigma, &[]));
        assert!(!is_faithfully_flat(&b, &sigma).unwrap());
    }

    #[test]
    fn iso_reflection() {
        let f = f2();
        let (b, sigma) = first_factor(f);
        let probes = default_reflection_probes(&b).unwrap();
        assert!(reflects_isos_probe(&Bimodule::regular(b.clone()), &probes));
        assert!(!reflects_isos_probe(&sigma, &probes));
        // the projection B -> first factor alone already witnesses the failure
        let s = simple_right_modules(&b).unwrap();
        let s1 = s.iter().find(|m| m.right_act(0).get(0, 0).is_one()).unwrap().clone();
        let reg = Bimodule::right_regular(b.clone());
        let proj = BimoduleMap::new(reg, s1, Mat::from_i64(f, &[&[1, 0]]));
        assert!(proj.is_valid());
        assert!(!reflects_isos_probe(&sigma, &[proj]));
        let zero_sigma = Bimodule::with_dim(
            b.clone(),
            Arc::new(Algebra::ground(f)),
            0,
            vec![Mat::zeros(f, 0, 0); 2],
            vec![Mat::zeros(f, 0, 0)],
            None,
        );
        assert!(!reflects_isos_probe(&zero_sigma, &probes));
    }
}
