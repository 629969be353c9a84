//! Instance files, command dispatch and report emission for `coring-lab`.

pub mod instance;
pub mod report;
pub mod run;

use coringlab::corpus::instances::{random_instance, CORPUS_IDS};

pub use instance::{InstanceFile, LoadError, Loaded};
pub use report::Report;
pub use run::{run, Command, RunError};

/// Corpus ids shipped as instance files, plus the seeded generator.
pub fn corpus_list() -> Vec<String> {
    let mut ids: Vec<String> = CORPUS_IDS.iter().map(|s| s.to_string()).collect();
    ids.push("random".into());
    ids
}

/// The instance file for a path, or the seeded random instance for `random`.
pub fn resolve(instance: &str, probes: Option<&str>, seed: Option<u64>) -> Result<(InstanceFile, Loaded, bool), LoadError> {
    if instance == "random" {
        let seed = seed.ok_or_else(|| LoadError::Validation {
            object: "random".into(),
            message: "a random instance needs --seed".into(),
        })?;
        let loaded = Loaded::from_instance(random_instance(seed));
        let file = InstanceFile {
            id: loaded.id.clone(),
            field: instance::field_tag(loaded.field),
            galois: Some(instance::GaloisDecl { comodule: "Sigma".into(), iota: None }),
            ..InstanceFile::default()
        };
        return Ok((file, loaded, true));
    }
    let mut file = InstanceFile::read(instance)?;
    if let Some(p) = probes {
        file.merge(InstanceFile::read(p)?)?;
    }
    let loaded = Loaded::build_lenient(&file)?;
    Ok((file, loaded, false))
}

/// Output text and exit status of one invocation; input errors become `Err`.
pub fn execute(command: &str, instance: &str, probes: Option<&str>, seed: Option<u64>, json: bool) -> Result<(String, u8), RunError> {
    let (file, loaded, generated) = resolve(instance, probes, seed)?;
    if command == "export" {
        if let Some((object, message)) = loaded.problems.first() {
            return Err(LoadError::Validation { object: object.clone(), message: message.clone() }.into());
        }
        return Ok((loaded.export(&file).to_json(), 0));
    }
    let cmd: Command = command.parse()?;
    if cmd != Command::Axioms && !generated {
        Loaded::build(&file)?;
    }
    let report = run(cmd, &loaded, seed)?;
    let text = if json { report.to_json() } else { report.to_text() };
    Ok((text, if report.assertions_hold { 0 } else { 1 }))
}

/// One committed golden report: instance argument, command, seed and path
/// relative to the crate's `goldens` directory.
#[derive(Clone, Debug)]
pub struct GoldenRun {
    pub instance: String,
    pub command: String,
    pub seed: Option<u64>,
    pub golden: String,
}

pub const GALOIS_COMMANDS: [&str; 9] = [
    "axioms",
    "galois",
    "theorem:debil",
    "theorem:fuerte",
    "theorem:ff",
    "theorem:ge",
    "theorem:clasico",
    "diagrams",
    "correspondences",
];

pub const RANDOM_SEEDS: [u64; 3] = [3, 11, 42];

/// Every golden run, with instance paths relative to the crate root.
pub fn golden_plan(mutants: &[String]) -> Vec<GoldenRun> {
    let mut out = Vec::new();
    let mut push = |instance: String, command: &str, seed: Option<u64>, dir: &str| {
        let golden = format!("{dir}/{}.txt", command.replace(':', "_"));
        out.push(GoldenRun { instance, command: command.to_string(), seed, golden });
    };
    for id in ["i1", "i2", "i3", "i5"] {
        for c in GALOIS_COMMANDS.iter().chain(&["equivalence", "firm"]) {
            push(format!("corpus/{id}.json"), c, None, id);
        }
    }
    for c in ["axioms", "firm"] {
        push("corpus/i4.json".into(), c, None, "i4");
    }
    for m in mutants {
        push(format!("corpus/mutants/{m}.json"), "axioms", None, &format!("mutants/{m}"));
    }
    for seed in RANDOM_SEEDS {
        for c in ["axioms", "galois", "correspondences", "theorem:fuerte"] {
            push("random".into(), c, Some(seed), &format!("random-{seed}"));
        }
    }
    out
}
