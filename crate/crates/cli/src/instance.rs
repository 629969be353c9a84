//! The JSON instance format: declarations keyed by name, vectors keyed by
//! basis label, matrices row-major with an explicit field tag.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use coringlab::bimod::{check_bimodule, is_fg_projective, tensor_over, Bimodule};
use coringlab::comod::{check_comodule, comodule_from_grouplike, regular_comodule, Comodule};
use coringlab::corings::{
    check_coring, comatrix_coaction, comatrix_coring, is_grouplike, sweedler_coring, trivial_coring,
    Coring, Grouplike,
};
use coringlab::exactla::{FieldSpec, Mat, Scalar};
use coringlab::galois::verify::Probes;
use coringlab::galois::GaloisInstance;
use coringlab::rings::{check_algebra, check_hom, Algebra, RingHom};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("validation error in {object}: {message}")]
    Validation { object: String, message: String },
}

fn invalid(object: impl Into<String>, message: impl Into<String>) -> LoadError {
    LoadError::Validation { object: object.into(), message: message.into() }
}

/// Coefficients keyed by basis label; missing labels are zero.
pub type Vector = BTreeMap<String, String>;

/// `[coefficient, left label, right label]`, one summand of an element of a tensor product.
pub type Term = (String, String, String);

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub id: String,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, HomDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, BimoduleDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub corings: BTreeMap<String, CoringDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comodules: BTreeMap<String, ComoduleDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub galois: Option<GaloisDecl>,
    #[serde(default, skip_serializing_if = "ProbeDecl::is_empty")]
    pub probes: ProbeDecl,
}

/// Structure constants as `products[x][y] = x*y`; omitted products are zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDecl {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vector>,
    #[serde(default)]
    pub products: BTreeMap<String, BTreeMap<String, Vector>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDecl {
    pub field: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDecl {
    pub source: String,
    pub target: String,
    pub matrix: MatrixDecl,
    #[serde(default)]
    pub unital: bool,
}

/// A `(left, right)`-bimodule; each action matrix is keyed by an algebra basis label.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDecl {
    pub left: String,
    pub right: String,
    pub basis: Vec<String>,
    pub left_action: BTreeMap<String, MatrixDecl>,
    pub right_action: BTreeMap<String, MatrixDecl>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "constructor", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoringDecl {
    Trivial { base: String },
    Sweedler { hom: String },
    Comatrix { module: String },
    Explicit { carrier: String, delta: BTreeMap<String, Vec<Term>>, counit: BTreeMap<String, Vector> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComoduleDecl {
    Grouplike { coring: String, element: Vector },
    Regular { coring: String },
    Comatrix { coring: String, module: String },
    Explicit { coring: String, carrier: String, coaction: BTreeMap<String, Vec<Term>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisDecl {
    pub comodule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iota: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeDecl {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub a_modules: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comodules: Vec<String>,
}

impl ProbeDecl {
    pub fn is_empty(&self) -> bool {
        self.a_modules.is_empty() && self.comodules.is_empty()
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError::Parse { line: e.line(), message: e.to_string() })
    }

    pub fn read(path: &str) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LoadError::Io { path: path.to_string(), message: e.to_string() })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files serialize");
        s.push('\n');
        s
    }

    /// Adds the declarations and probes of a partial instance file.
    pub fn merge(&mut self, extra: InstanceFile) -> Result<(), LoadError> {
        if extra.field != self.field {
            return Err(invalid("probes", format!("field {} differs from {}", extra.field, self.field)));
        }
        fn add<T>(into: &mut BTreeMap<String, T>, from: BTreeMap<String, T>, kind: &str) -> Result<(), LoadError> {
            for (k, v) in from {
                if into.contains_key(&k) {
                    return Err(invalid(format!("{kind} {k}"), "declared twice"));
                }
                into.insert(k, v);
            }
            Ok(())
        }
        add(&mut self.algebras, extra.algebras, "algebra")?;
        add(&mut self.homs, extra.homs, "hom")?;
        add(&mut self.bimodules, extra.bimodules, "bimodule")?;
        add(&mut self.corings, extra.corings, "coring")?;
        add(&mut self.comodules, extra.comodules, "comodule")?;
        self.probes.a_modules.extend(extra.probes.a_modules);
        self.probes.comodules.extend(extra.probes.comodules);
        Ok(())
    }
}

pub fn parse_field(text: &str) -> Option<FieldSpec> {
    if text == "Q" {
        return Some(FieldSpec::Rationals);
    }
    FieldSpec::prime(text.strip_prefix('F')?.parse().ok()?).ok()
}

/// A fully built object graph together with every axiom failure found.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub id: String,
    pub field: FieldSpec,
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub homs: BTreeMap<String, RingHom>,
    pub bimodules: BTreeMap<String, Bimodule>,
    pub corings: BTreeMap<String, Arc<Coring>>,
    pub comodules: BTreeMap<String, Comodule>,
    pub galois: Option<GaloisInstance>,
    pub probes: Probes,
    /// `(object, violation)` pairs from the validators, in declaration order.
    pub problems: Vec<(String, String)>,
}

struct Builder {
    field: FieldSpec,
    out: Loaded,
}

impl Builder {
    fn scalar(&self, obj: &str, s: &str) -> Result<Scalar, LoadError> {
        self.field.parse(s).ok_or_else(|| invalid(obj, format!("'{s}' is not a scalar of {}", self.field)))
    }

    fn vector(&self, obj: &str, labels: &[String], v: &Vector) -> Result<Vec<Scalar>, LoadError> {
        let mut out = vec![self.field.zero(); labels.len()];
        for (k, s) in v {
            let i = index_of(obj, labels, k)?;
            out[i] = self.scalar(obj, s)?;
        }
        Ok(out)
    }

    fn matrix(&self, obj: &str, m: &MatrixDecl, rows: usize, cols: usize) -> Result<Mat, LoadError> {
        if parse_field(&m.field) != Some(self.field) {
            return Err(invalid(obj, format!("matrix field {} differs from {}", m.field, self.field)));
        }
        if m.rows.len() != rows || m.rows.iter().any(|r| r.len() != cols) {
            return Err(invalid(obj, format!("matrix must be {rows}x{cols}")));
        }
        let mut out = Mat::zeros(self.field, rows, cols);
        for (i, r) in m.rows.iter().enumerate() {
            for (j, s) in r.iter().enumerate() {
                out.set(i, j, self.scalar(obj, s)?);
            }
        }
        Ok(out)
    }

    fn algebra(&self, obj: &str, name: &str) -> Result<Arc<Algebra>, LoadError> {
        self.out.algebras.get(name).cloned().ok_or_else(|| invalid(obj, format!("unknown algebra '{name}'")))
    }

    fn coring(&self, obj: &str, name: &str) -> Result<Arc<Coring>, LoadError> {
        self.out.corings.get(name).cloned().ok_or_else(|| invalid(obj, format!("unknown coring '{name}'")))
    }

    fn bimodule(&self, obj: &str, name: &str) -> Result<Bimodule, LoadError> {
        self.out.bimodules.get(name).cloned().ok_or_else(|| invalid(obj, format!("unknown bimodule '{name}'")))
    }

    fn problem(&mut self, obj: &str, msgs: Vec<String>) {
        self.out.problems.extend(msgs.into_iter().map(|m| (obj.to_string(), m)));
    }

    fn build_algebra(&mut self, name: &str, d: &AlgebraDecl) -> Result<(), LoadError> {
        let obj = format!("algebra {name}");
        let labels = &d.basis;
        unique_labels(&obj, labels)?;
        let n = labels.len();
        if n == 0 {
            return Err(invalid(&obj, "basis is empty"));
        }
        let mut consts = vec![self.field.zero(); n * n * n];
        for (x, row) in &d.products {
            let i = index_of(&obj, labels, x)?;
            for (y, v) in row {
                let j = index_of(&obj, labels, y)?;
                let c = self.vector(&obj, labels, v)?;
                consts[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&c);
            }
        }
        let unit = d.unit.as_ref().map(|u| self.vector(&obj, labels, u)).transpose()?;
        let a = Algebra::new(self.field, n, consts, unit, Some(labels.clone()));
        let report = check_algebra(&a);
        self.problem(&obj, report.describe(&a));
        self.out.algebras.insert(name.to_string(), Arc::new(a));
        Ok(())
    }

    fn build_hom(&mut self, name: &str, d: &HomDecl) -> Result<(), LoadError> {
        let obj = format!("hom {name}");
        let s = self.algebra(&obj, &d.source)?;
        let t = self.algebra(&obj, &d.target)?;
        let m = self.matrix(&obj, &d.matrix, t.dim(), s.dim())?;
        let h = RingHom::new(s, t, m, d.unital);
        self.problem(&obj, check_hom(&h));
        self.out.homs.insert(name.to_string(), h);
        Ok(())
    }

    fn actions(&self, obj: &str, a: &Algebra, acts: &BTreeMap<String, MatrixDecl>, dim: usize) -> Result<Vec<Mat>, LoadError> {
        let mut out = vec![None; a.dim()];
        for (k, m) in acts {
            let i = index_of(obj, a.labels(), k)?;
            out[i] = Some(self.matrix(obj, m, dim, dim)?);
        }
        out.into_iter()
            .zip(a.labels())
            .map(|(m, l)| m.ok_or_else(|| invalid(obj, format!("no action given for '{l}'"))))
            .collect()
    }

    fn build_bimodule(&mut self, name: &str, d: &BimoduleDecl) -> Result<(), LoadError> {
        let obj = format!("bimodule {name}");
        unique_labels(&obj, &d.basis)?;
        let left = self.algebra(&obj, &d.left)?;
        let right = self.algebra(&obj, &d.right)?;
        let dim = d.basis.len();
        let l = self.actions(&obj, &left, &d.left_action, dim)?;
        let r = self.actions(&obj, &right, &d.right_action, dim)?;
        let m = Bimodule::with_dim(left, right, dim, l, r, Some(d.basis.clone()));
        self.problem(&obj, check_bimodule(&m));
        self.out.bimodules.insert(name.to_string(), m);
        Ok(())
    }

    /// Pushes `Σ coef · (l ⊗ r)` through the projection onto `tensor`.
    fn tensor_vector(&self, obj: &str, tensor: &Bimodule, left: &[String], right: &[String], terms: &[Term]) -> Result<Vec<Scalar>, LoadError> {
        let f = self.field;
        let mut flat = vec![f.zero(); left.len() * right.len()];
        for (c, l, r) in terms {
            let i = index_of(obj, left, l)? * right.len() + index_of(obj, right, r)?;
            flat[i] = f.add(&flat[i], &self.scalar(obj, c)?);
        }
        let info = tensor.tensor_info().expect("built by tensor_over");
        Ok(info.projection().mul_vec(&flat))
    }

    fn build_coring(&mut self, name: &str, d: &CoringDecl) -> Result<(), LoadError> {
        let obj = format!("coring {name}");
        let fail = |e: coringlab::corings::CoringError| invalid(&obj, e.to_string());
        let c = match d {
            CoringDecl::Trivial { base } => trivial_coring(&self.algebra(&obj, base)?).map_err(fail)?,
            CoringDecl::Sweedler { hom } => {
                let h = self.out.homs.get(hom).ok_or_else(|| invalid(&obj, format!("unknown hom '{hom}'")))?;
                sweedler_coring(h).map_err(fail)?.0
            }
            CoringDecl::Comatrix { module } => {
                let m = self.bimodule(&obj, module)?;
                let db = is_fg_projective(&m).ok_or_else(|| invalid(&obj, format!("{module} is not finitely generated projective")))?;
                comatrix_coring(&m, &db).map_err(fail)?
            }
            CoringDecl::Explicit { carrier, delta, counit } => {
                let car = self.bimodule(&obj, carrier)?;
                let cc = tensor_over(&car, &car).map_err(|e| invalid(&obj, e.to_string()))?;
                let labels = car.labels().to_vec();
                let a = car.right().clone();
                let mut dcols = vec![vec![self.field.zero(); cc.dim()]; labels.len()];
                for (k, terms) in delta {
                    let i = index_of(&obj, &labels, k)?;
                    dcols[i] = self.tensor_vector(&obj, &cc, &labels, &labels, terms)?;
                }
                let mut ecols = vec![vec![self.field.zero(); a.dim()]; labels.len()];
                for (k, v) in counit {
                    let i = index_of(&obj, &labels, k)?;
                    ecols[i] = self.vector(&obj, a.labels(), v)?;
                }
                let delta = Mat::from_columns(self.field, cc.dim(), &dcols);
                let eps = Mat::from_columns(self.field, a.dim(), &ecols);
                Coring::new(car, delta, eps).map_err(fail)?
            }
        };
        self.problem(&obj, check_coring(&c).describe(&c));
        self.out.corings.insert(name.to_string(), Arc::new(c));
        Ok(())
    }

    fn build_comodule(&mut self, name: &str, d: &ComoduleDecl) -> Result<(), LoadError> {
        let obj = format!("comodule {name}");
        let fail = |e: String| invalid(&obj, e);
        let x = match d {
            ComoduleDecl::Grouplike { coring, element } => {
                let c = self.coring(&obj, coring)?;
                let g = self.vector(&obj, c.carrier().labels(), element)?;
                match is_grouplike(&c, &g) {
                    Ok(true) => {}
                    Ok(false) => self.problem(&obj, vec!["element is not group-like".into()]),
                    Err(e) => return Err(fail(e.to_string())),
                }
                let x = comodule_from_grouplike(&Grouplike { coring: (*c).clone(), g }).map_err(|e| fail(e.to_string()))?;
                // keep the declared coring so that comodules over it can be compared
                Comodule::new(c, x.carrier().clone(), x.rho().clone()).map_err(|e| fail(e.to_string()))?
            }
            ComoduleDecl::Regular { coring } => regular_comodule(&self.coring(&obj, coring)?),
            ComoduleDecl::Comatrix { coring, module } => {
                let c = self.coring(&obj, coring)?;
                let m = self.bimodule(&obj, module)?;
                let db = is_fg_projective(&m).ok_or_else(|| fail(format!("{module} is not finitely generated projective")))?;
                let rho = comatrix_coaction(&m, &db, &c);
                Comodule::new(c, m, rho).map_err(|e| fail(e.to_string()))?
            }
            ComoduleDecl::Explicit { coring, carrier, coaction } => {
                let c = self.coring(&obj, coring)?;
                let car = self.bimodule(&obj, carrier)?;
                let xc = tensor_over(&car, c.carrier()).map_err(|e| fail(e.to_string()))?;
                let labels = car.labels().to_vec();
                let mut cols = vec![vec![self.field.zero(); xc.dim()]; labels.len()];
                for (k, terms) in coaction {
                    let i = index_of(&obj, &labels, k)?;
                    cols[i] = self.tensor_vector(&obj, &xc, &labels, c.carrier().labels(), terms)?;
                }
                let rho = Mat::from_columns(self.field, xc.dim(), &cols);
                Comodule::new(c, car, rho).map_err(|e| fail(e.to_string()))?
            }
        };
        self.problem(&obj, check_comodule(&x).describe(x.carrier().labels()));
        self.out.comodules.insert(name.to_string(), x);
        Ok(())
    }
}

fn index_of(obj: &str, labels: &[String], label: &str) -> Result<usize, LoadError> {
    labels.iter().position(|l| l == label).ok_or_else(|| invalid(obj, format!("unknown basis label '{label}'")))
}

fn unique_labels(obj: &str, labels: &[String]) -> Result<(), LoadError> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(invalid(obj, format!("basis label '{l}' repeated")));
        }
    }
    Ok(())
}

impl Loaded {
    /// Builds the object graph, recording axiom failures instead of rejecting them.
    pub fn build_lenient(file: &InstanceFile) -> Result<Loaded, LoadError> {
        let field = parse_field(&file.field).ok_or_else(|| invalid("field", format!("unknown field '{}'", file.field)))?;
        let mut b = Builder {
            field,
            out: Loaded {
                id: file.id.clone(),
                field,
                algebras: BTreeMap::new(),
                homs: BTreeMap::new(),
                bimodules: BTreeMap::new(),
                corings: BTreeMap::new(),
                comodules: BTreeMap::new(),
                galois: None,
                probes: Probes::default(),
                problems: Vec::new(),
            },
        };
        if !file.algebras.contains_key("k") {
            b.out.algebras.insert("k".into(), Arc::new(Algebra::ground(field)));
        }
        for (n, d) in &file.algebras {
            b.build_algebra(n, d)?;
        }
        for (n, d) in &file.homs {
            b.build_hom(n, d)?;
        }
        for (n, d) in &file.bimodules {
            b.build_bimodule(n, d)?;
        }
        for (n, d) in &file.corings {
            b.build_coring(n, d)?;
        }
        for (n, d) in &file.comodules {
            b.build_comodule(n, d)?;
        }
        let mut out = b.out;
        if let Some(g) = &file.galois {
            let obj = "galois";
            let sigma = out.comodules.get(&g.comodule).cloned().ok_or_else(|| invalid(obj, format!("unknown comodule '{}'", g.comodule)))?;
            let iota = match &g.iota {
                Some(h) => Some(out.homs.get(h).cloned().ok_or_else(|| invalid(obj, format!("unknown hom '{h}'")))?),
                None => None,
            };
            out.galois = Some(GaloisInstance::new(file.id.clone(), sigma, iota));
        }
        for name in &file.probes.a_modules {
            let m = out.bimodules.get(name).cloned().ok_or_else(|| invalid("probes", format!("unknown bimodule '{name}'")))?;
            if let Some(g) = &out.galois {
                if **m.right() != **g.a() {
                    return Err(invalid("probes", format!("{name} is not a module over the base of the coring")));
                }
            }
            out.probes.a_modules.push(m.forget_left());
        }
        for name in &file.probes.comodules {
            let x = out.comodules.get(name).cloned().ok_or_else(|| invalid("probes", format!("unknown comodule '{name}'")))?;
            if let Some(g) = &out.galois {
                if !Arc::ptr_eq(x.coring(), g.coring()) {
                    return Err(invalid("probes", format!("{name} is not a comodule over the instance's coring")));
                }
            }
            out.probes.comodules.push(x.forget_left());
        }
        Ok(out)
    }

    /// Builds the object graph and rejects the first axiom failure.
    pub fn build(file: &InstanceFile) -> Result<Loaded, LoadError> {
        let out = Self::build_lenient(file)?;
        if let Some((object, message)) = out.problems.first() {
            return Err(invalid(object, message));
        }
        Ok(out)
    }

    pub fn load(path: &str) -> Result<Loaded, LoadError> {
        Self::build(&InstanceFile::read(path)?)
    }

    /// Wraps a generated instance; its objects are named `A`, `B`, `C`, `Sigma`.
    pub fn from_instance(inst: GaloisInstance) -> Loaded {
        let field = inst.a().field();
        let mut algebras = BTreeMap::new();
        algebras.insert("A".to_string(), inst.a().clone());
        if **inst.b() != **inst.a() {
            algebras.insert("B".to_string(), inst.b().clone());
        }
        let mut corings = BTreeMap::new();
        corings.insert("C".to_string(), inst.coring().clone());
        let mut comodules = BTreeMap::new();
        comodules.insert("Sigma".to_string(), inst.sigma.clone());
        let mut problems = Vec::new();
        for (n, a) in &algebras {
            problems.extend(check_algebra(a).describe(a).into_iter().map(|m| (format!("algebra {n}"), m)));
        }
        let c = inst.coring();
        problems.extend(check_coring(c).describe(c).into_iter().map(|m| ("coring C".to_string(), m)));
        let labels = inst.sigma.carrier().labels();
        problems.extend(check_comodule(&inst.sigma).describe(labels).into_iter().map(|m| ("comodule Sigma".to_string(), m)));
        Loaded {
            id: inst.name.clone(),
            field,
            algebras,
            homs: BTreeMap::new(),
            bimodules: BTreeMap::new(),
            corings,
            comodules,
            galois: Some(inst),
            probes: Probes::default(),
            problems,
        }
    }

    /// Every declared object agrees with its counterpart in `other`.
    pub fn same_graph(&self, other: &Loaded) -> bool {
        fn covered<T, F: Fn(&T, &T) -> bool>(a: &BTreeMap<String, T>, b: &BTreeMap<String, T>, eq: F) -> bool {
            a.iter().all(|(k, v)| b.get(k).is_some_and(|w| eq(v, w)))
        }
        self.field == other.field
            && covered(&self.algebras, &other.algebras, |a, b| a == b && a.labels() == b.labels())
            && covered(&self.homs, &other.homs, |a, b| a == b)
            && covered(&self.bimodules, &other.bimodules, |a, b| a == b && a.labels() == b.labels())
            && covered(&self.corings, &other.corings, |a, b| {
                a.carrier() == b.carrier() && a.delta() == b.delta() && a.eps() == b.eps()
            })
            && covered(&self.comodules, &other.comodules, |a, b| a.carrier() == b.carrier() && a.rho() == b.rho())
            && self.probes.a_modules == other.probes.a_modules
            && self.probes.comodules.len() == other.probes.comodules.len()
    }

    /// Writes every object explicitly: corings as `(Δ, ε)` tables and
    /// comodules as coaction tables, with carriers declared as bimodules.
    pub fn export(&self, source: &InstanceFile) -> InstanceFile {
        let mut ex = Exporter { field: self.field, out: InstanceFile::default(), names: Vec::new() };
        ex.out.id = self.id.clone();
        ex.out.field = field_tag(self.field);
        ex.out.description = source.description.clone();
        for (n, a) in &self.algebras {
            ex.names.push((n.clone(), a.clone()));
            if n != "k" || source.algebras.contains_key("k") {
                let d = ex.algebra_decl(a);
                ex.out.algebras.insert(n.clone(), d);
            }
        }
        for (n, h) in &self.homs {
            let d = HomDecl {
                source: ex.algebra_name(&h.source),
                target: ex.algebra_name(&h.target),
                matrix: ex.matrix(&h.matrix),
                unital: h.unital,
            };
            ex.out.homs.insert(n.clone(), d);
        }
        for (n, m) in &self.bimodules {
            let d = ex.bimodule_decl(m);
            ex.out.bimodules.insert(n.clone(), d);
        }
        for (n, c) in &self.corings {
            let carrier = format!("{n}.carrier");
            let d = ex.bimodule_decl(c.carrier());
            ex.out.bimodules.insert(carrier.clone(), d);
            let labels = c.carrier().labels();
            let a = c.base();
            let mut delta = BTreeMap::new();
            let mut counit = BTreeMap::new();
            for (i, l) in labels.iter().enumerate() {
                delta.insert(l.clone(), ex.terms(c.cc(), labels, labels, &c.delta().column(i)));
                counit.insert(l.clone(), ex.vector(a.labels(), &c.eps().column(i)));
            }
            ex.out.corings.insert(n.clone(), CoringDecl::Explicit { carrier, delta, counit });
        }
        for (n, x) in &self.comodules {
            let coring = self.corings.iter().find(|(_, c)| Arc::ptr_eq(c, x.coring())).map(|(k, _)| k.clone());
            let coring = coring.expect("comodules refer to declared corings");
            let carrier = format!("{n}.carrier");
            let d = ex.bimodule_decl(x.carrier());
            ex.out.bimodules.insert(carrier.clone(), d);
            let labels = x.carrier().labels();
            let mut coaction = BTreeMap::new();
            for (i, l) in labels.iter().enumerate() {
                coaction.insert(l.clone(), ex.terms(x.xc(), labels, x.coring().carrier().labels(), &x.rho().column(i)));
            }
            ex.out.comodules.insert(n.clone(), ComoduleDecl::Explicit { coring, carrier, coaction });
        }
        ex.out.galois = source.galois.clone();
        ex.out.probes = source.probes.clone();
        ex.out
    }
}

pub fn field_tag(f: FieldSpec) -> String {
    f.to_string()
}

struct Exporter {
    field: FieldSpec,
    out: InstanceFile,
    names: Vec<(String, Arc<Algebra>)>,
}

impl Exporter {
    fn scalar(s: &Scalar) -> String {
        s.to_string()
    }

    fn vector(&self, labels: &[String], v: &[Scalar]) -> Vector {
        labels.iter().zip(v).filter(|(_, s)| !s.is_zero()).map(|(l, s)| (l.clone(), Self::scalar(s))).collect()
    }

    fn matrix(&self, m: &Mat) -> MatrixDecl {
        let rows = (0..m.rows()).map(|i| m.row(i).iter().map(Self::scalar).collect()).collect();
        MatrixDecl { field: field_tag(self.field), rows }
    }

    fn algebra_decl(&self, a: &Algebra) -> AlgebraDecl {
        let labels = a.labels();
        let n = a.dim();
        let mut products = BTreeMap::new();
        for i in 0..n {
            let mut row = BTreeMap::new();
            for j in 0..n {
                let v: Vec<Scalar> = (0..n).map(|k| a.structure_constant(i, j, k).clone()).collect();
                if v.iter().any(|s| !s.is_zero()) {
                    row.insert(labels[j].clone(), self.vector(labels, &v));
                }
            }
            if !row.is_empty() {
                products.insert(labels[i].clone(), row);
            }
        }
        AlgebraDecl { basis: labels.to_vec(), unit: a.unit().map(|u| self.vector(labels, u)), products }
    }

    /// The name of an algebra equal to `a`, declaring a fresh one if needed.
    fn algebra_name(&mut self, a: &Arc<Algebra>) -> String {
        if let Some((n, _)) = self.names.iter().find(|(_, b)| **b == **a && b.labels() == a.labels()) {
            return n.clone();
        }
        let n = format!("algebra{}", self.names.len());
        self.names.push((n.clone(), a.clone()));
        let d = self.algebra_decl(a);
        self.out.algebras.insert(n.clone(), d);
        n
    }

    fn bimodule_decl(&mut self, m: &Bimodule) -> BimoduleDecl {
        let left = self.algebra_name(m.left());
        let right = self.algebra_name(m.right());
        let acts = |alg: &Algebra, ms: &[Mat]| alg.labels().iter().cloned().zip(ms.iter().map(|x| self.matrix(x))).collect();
        BimoduleDecl {
            left_action: acts(m.left(), m.left_acts()),
            right_action: acts(m.right(), m.right_acts()),
            left,
            right,
            basis: m.labels().to_vec(),
        }
    }

    /// Lifts a vector of `tensor` to flat coordinates and lists its nonzero summands.
    fn terms(&self, tensor: &Bimodule, left: &[String], right: &[String], v: &[Scalar]) -> Vec<Term> {
        let flat = tensor.tensor_info().expect("built by tensor_over").section().mul_vec(v);
        let mut out = Vec::new();
        for (i, s) in flat.iter().enumerate() {
            if !s.is_zero() {
                out.push((Self::scalar(s), left[i / right.len()].clone(), right[i % right.len()].clone()));
            }
        }
        out
    }
}
