//! Command dispatch: each command turns a loaded instance into a report.

use std::str::FromStr;

use thiserror::Error;

use coringlab::bimod::{is_firm_left_module, is_firm_module, tensor_over, Bimodule};
use coringlab::comonadlab::{
    alpha_from_phi, beta_from_phi, contractible_equalizer_check, counit_hat, counit_hat_on_cofree_is_phi,
    phi_from_alpha, phi_from_beta, unit_hat, D_phi, K_phi,
};
use coringlab::galois::verify::{
    is_galois, lemma_left_ideal, verify_diagrams, verify_theorem, Condition, Context, Theorem,
};
use coringlab::galois::{GaloisError, GaloisInstance};
use coringlab::rings::is_firm_ring;

use crate::instance::{LoadError, Loaded};
use crate::report::{Report, Section, Value};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("unknown command '{0}'")]
    UnknownCommand(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("command {0} needs a galois binding in the instance file")]
    NoGaloisInstance(String),
    #[error("verifier error: {0}")]
    Verifier(#[from] GaloisError),
    #[error("comonad error: {0}")]
    Comonad(#[from] coringlab::comonadlab::ComonadError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Axioms,
    Firm,
    Galois,
    Theorem(Theorem),
    Diagrams,
    Correspondences,
    Equivalence,
}

impl FromStr for Command {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, RunError> {
        Ok(match s {
            "axioms" => Command::Axioms,
            "firm" => Command::Firm,
            "galois" => Command::Galois,
            "diagrams" => Command::Diagrams,
            "correspondences" => Command::Correspondences,
            "equivalence" => Command::Equivalence,
            _ => s
                .strip_prefix("theorem:")
                .and_then(Theorem::from_key)
                .map(Command::Theorem)
                .ok_or_else(|| RunError::UnknownCommand(s.to_string()))?,
        })
    }
}

impl std::fmt::Display for Command {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Command::Axioms => f.write_str("axioms"),
            Command::Firm => f.write_str("firm"),
            Command::Galois => f.write_str("galois"),
            Command::Theorem(t) => write!(f, "theorem:{t}"),
            Command::Diagrams => f.write_str("diagrams"),
            Command::Correspondences => f.write_str("correspondences"),
            Command::Equivalence => f.write_str("equivalence"),
        }
    }
}

pub fn run(cmd: Command, loaded: &Loaded, seed: Option<u64>) -> Result<Report, RunError> {
    let sections = match cmd {
        Command::Axioms => axioms(loaded),
        Command::Firm => firm(loaded),
        Command::Galois => galois(&context(loaded, cmd)?)?,
        Command::Theorem(t) => theorem(&context(loaded, cmd)?, t)?,
        Command::Diagrams => diagrams(&context(loaded, cmd)?)?,
        Command::Correspondences => correspondences(&context(loaded, cmd)?)?,
        Command::Equivalence => equivalence(&context(loaded, cmd)?)?,
    };
    Ok(Report::new(&loaded.id, &cmd.to_string(), seed, sections))
}

fn context(loaded: &Loaded, cmd: Command) -> Result<Context<'_>, RunError> {
    let inst: &GaloisInstance = loaded.galois.as_ref().ok_or_else(|| RunError::NoGaloisInstance(cmd.to_string()))?;
    Ok(Context::new(inst, &loaded.probes)?)
}

fn a_probe_names(ctx: &Context) -> Vec<String> {
    let mut names: Vec<String> = ["A", "A^2", "C", "Sigma"].iter().map(|s| s.to_string()).collect();
    names.extend((0..ctx.probes.a_modules.len()).map(|i| format!("extra {i}")));
    names
}

fn probe_name(kind: &str, i: usize, dim: usize) -> String {
    format!("{kind} {i} (dim {dim})")
}

fn axioms(loaded: &Loaded) -> Vec<Section> {
    let kinds: [(&str, Vec<&String>); 5] = [
        ("algebra", loaded.algebras.keys().collect()),
        ("hom", loaded.homs.keys().collect()),
        ("bimodule", loaded.bimodules.keys().collect()),
        ("coring", loaded.corings.keys().collect()),
        ("comodule", loaded.comodules.keys().collect()),
    ];
    let mut out = Vec::new();
    for (kind, names) in kinds {
        if names.is_empty() {
            continue;
        }
        let mut s = Section::new(format!("{kind}s"));
        for n in names {
            let obj = format!("{kind} {n}");
            let found: Vec<String> =
                loaded.problems.iter().filter(|(o, _)| *o == obj).map(|(_, m)| m.clone()).collect();
            let ok = found.is_empty();
            let value = if ok { Value::Text("ok".into()) } else { Value::List(found) };
            s.assert(n.clone(), value, ok);
        }
        out.push(s);
    }
    out
}

fn firm(loaded: &Loaded) -> Vec<Section> {
    let mut out = Vec::new();
    for (n, a) in &loaded.algebras {
        let mut s = Section::new(format!("algebra {n}"));
        s.info("dim", Value::Count(a.dim()));
        s.info("unital", Value::Bool(a.is_unital()));
        let reg = Bimodule::regular(a.clone());
        let tensor_dim = tensor_over(&reg, &reg).expect("same algebra").dim();
        s.info("dim A ⊗_A A", Value::Count(tensor_dim));
        match is_firm_ring(a) {
            Some(w) => {
                s.info("firm", Value::Bool(true));
                let left = w.d.mul(&w.mult_map).is_identity();
                let right = w.mult_map.mul(&w.d).is_identity();
                s.assert_true("d is a two-sided inverse of multiplication", left && right);
            }
            None => {
                s.info("firm", Value::Bool(false));
            }
        }
        out.push(s);
    }
    for (n, m) in &loaded.bimodules {
        let mut s = Section::new(format!("bimodule {n}"));
        s.info("firm as right module", Value::Bool(is_firm_module(m).is_some()));
        s.info("firm as left module", Value::Bool(is_firm_left_module(m).is_some()));
        out.push(s);
    }
    out
}

fn galois(ctx: &Context) -> Result<Vec<Section>, RunError> {
    let g = is_galois(ctx)?;
    let mut s = Section::new("can");
    s.probe_verified = g.mode == "probe";
    s.info("mode", Value::Text(g.mode.into()));
    s.info("is_galois", Value::Bool(g.is_galois));
    if let Some(can) = &g.can {
        s.info("can", Value::matrix(&can.matrix));
    }
    if let Some(k) = &g.kernel {
        s.info("dim ker(can)", Value::Count(k.dim()));
        if !k.is_zero() {
            s.info("ker(can) basis, one vector per row", Value::matrix(k.basis()));
        }
    }
    if let Some(m) = g.coring_morphism {
        s.assert_true("can is a coring map", m);
    }
    s.info("can over T invertible exactly when over B", Value::option(g.t_agrees));
    let lemma = lemma_left_ideal(ctx);
    let mut l = Section::new("left ideal lemma");
    l.info("unit at B surjective", Value::Bool(lemma.hypothesis));
    l.info("B left ideal of T", Value::Bool(lemma.conclusion));
    l.assert_true("implication holds", lemma.holds());
    Ok(vec![s, l])
}

fn conditions(s: &mut Section, cs: &[Condition]) {
    for c in cs {
        s.described(c.label.clone(), c.description.clone(), Value::option(c.value));
    }
}

fn theorem(ctx: &Context, t: Theorem) -> Result<Vec<Section>, RunError> {
    let r = verify_theorem(ctx, t)?;
    let mut h = Section::new("hypotheses");
    conditions(&mut h, &r.hypotheses);
    let mut c = Section::new("conditions");
    c.probe_verified = r.probe_verified;
    conditions(&mut c, &r.conditions);
    let mut v = Section::new("verdict");
    v.info("hypotheses hold", Value::Bool(r.hypotheses_hold()));
    v.info("conditions agree", Value::Bool(r.agree()));
    v.info("common value", Value::option(r.verdict()));
    v.assert_true("equivalence consistent", r.consistent());
    Ok(vec![h, c, v])
}

fn diagrams(ctx: &Context) -> Result<Vec<Section>, RunError> {
    let mut s = Section::new("diagrams");
    s.probe_verified = true;
    for c in verify_diagrams(ctx)? {
        match c.value {
            Some(ok) => s.assert(c.label, Value::Bool(ok), ok),
            None => s.described(c.label, c.description, Value::Unknown),
        };
    }
    Ok(vec![s])
}

fn correspondences(ctx: &Context) -> Result<Vec<Section>, RunError> {
    let cm = &ctx.cm;
    let from_alpha = phi_from_alpha(&alpha_from_phi(cm))?;
    let beta = beta_from_phi(cm);
    let from_beta = phi_from_beta(&beta)?;
    let mut out = Vec::new();
    for (x, name) in ctx.a_probes().iter().zip(a_probe_names(ctx)) {
        let mut s = Section::new(format!("A-probe {name} (dim {})", x.dim()));
        let phi = cm.phi(x);
        s.assert_true("Δφ = φ²δ and εφ = ε", cm.check_at(x)?);
        s.assert_true("alpha round trip", from_alpha.phi(x) == phi);
        s.assert_true("beta round trip", from_beta.phi(x) == phi);
        s.assert_true("contractible equalizer", contractible_equalizer_check(cm, x));
        s.assert_true("counit at cofree equals φ", counit_hat_on_cofree_is_phi(cm, x));
        out.push(s);
    }
    let mut s = Section::new("B-probes");
    for (i, y) in cm.setting.b_probes().iter().enumerate() {
        s.assert_true(format!("{} beta natural", probe_name("B-probe", i, y.dim())), beta.check_at(y));
    }
    out.push(s);
    Ok(out)
}

fn equivalence(ctx: &Context) -> Result<Vec<Section>, RunError> {
    let cm = &ctx.cm;
    let s_ = &cm.setting;
    let mut units = Section::new("unit");
    units.probe_verified = true;
    let mut triangles = Section::new("triangle identities");
    for (i, y) in s_.b_probes().iter().enumerate() {
        let name = probe_name("B-probe", i, y.dim());
        let u = unit_hat(cm, y)?;
        units.info(format!("{name} invertible"), Value::Bool(u.is_invertible()));
        let k = K_phi(cm, y);
        let d = D_phi(cm, &k);
        let ku = s_.l_map(&u, y, &d.object);
        triangles.assert_true(format!("{name}: ε̂_K · K(η̂) = id"), counit_hat(cm, &k).mul(&ku).is_identity());
    }
    let mut counits = Section::new("counit");
    counits.probe_verified = true;
    for (i, x) in ctx.comodule_probes().iter().enumerate() {
        let e = counit_hat(cm, x);
        let name = probe_name("comodule probe", i, x.dim());
        counits.info(format!("{name} invertible"), Value::Bool(e.is_invertible()));
        if !e.is_invertible() {
            counits.info(format!("{name} dim ker"), Value::Count(e.cols() - e.rank()));
        }
    }
    let mut summary = Section::new("summary");
    summary.info("unit isos", Value::Bool(ctx.unit_isos()));
    summary.info("counit isos", Value::Bool(ctx.counit_isos()));
    Ok(vec![units, counits, triangles, summary])
}
