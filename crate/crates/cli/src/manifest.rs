//! Run manifests: a flat `key=value` file written next to every output so the
//! run can be replayed with `qdate rerun`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use qdate_core::KvMap;

pub const TOOL: &str = "qdate";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
const PARAM_PREFIX: &str = "param.";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunManifest {
    pub subcommand: String,
    /// Fully resolved flags, without the leading `--`, in argv order.
    pub params: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub output: PathBuf,
    pub version: String,
}

impl RunManifest {
    pub fn new(subcommand: &str, output: &Path, seed: Option<u64>) -> Self {
        Self {
            subcommand: subcommand.to_string(),
            params: Vec::new(),
            seed,
            output: output.to_path_buf(),
            version: VERSION.to_string(),
        }
    }

    pub fn param(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.params.push((name.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.params
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    /// Manifest path for an output file: `<output>.manifest`.
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_owned();
        name.push(".manifest");
        PathBuf::from(name)
    }

    pub fn to_kv(&self) -> KvMap {
        let mut kv = KvMap::new();
        kv.insert("tool", TOOL);
        kv.insert("version", &self.version);
        kv.insert("subcommand", &self.subcommand);
        kv.insert(
            "seed",
            self.seed.map_or("none".to_string(), |s| s.to_string()),
        );
        kv.insert("output", self.output.display());
        for (k, v) in &self.params {
            kv.insert(&format!("{PARAM_PREFIX}{k}"), v);
        }
        kv
    }

    pub fn from_kv(kv: &KvMap) -> Result<Self> {
        if kv.get("tool") != Some(TOOL) {
            bail!("not a {TOOL} manifest");
        }
        let seed = match kv.get("seed") {
            None | Some("none") => None,
            Some(s) => Some(s.parse().with_context(|| format!("bad seed {s:?}"))?),
        };
        let params = kv
            .iter()
            .filter_map(|(k, v)| {
                k.strip_prefix(PARAM_PREFIX)
                    .map(|k| (k.to_string(), v.to_string()))
            })
            .collect();
        Ok(Self {
            subcommand: kv
                .get("subcommand")
                .context("manifest has no subcommand")?
                .to_string(),
            params,
            seed,
            output: PathBuf::from(kv.get("output").context("manifest has no output")?),
            version: kv.get("version").unwrap_or_default().to_string(),
        })
    }

    pub fn write_next_to(&self, output: &Path) -> Result<()> {
        let path = Self::path_for(output);
        fs::write(&path, self.to_kv().to_string())
            .with_context(|| format!("cannot write manifest {}", path.display()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read manifest {}", path.display()))?;
        let kv: KvMap = text.parse()?;
        Self::from_kv(&kv)
    }

    /// Command line that reproduces the run.
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec![TOOL.to_string(), self.subcommand.clone()];
        for (k, v) in &self.params {
            args.push(format!("--{k}"));
            args.push(v.clone());
        }
        args
    }
}
