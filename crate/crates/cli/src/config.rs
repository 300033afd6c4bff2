//! Runtime configuration: defaults, an optional TOML file, the
//! `SPRINGERGREEN_CACHE` variable and command-line flags, in that order.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

pub const CACHE_ENV: &str = "SPRINGERGREEN_CACHE";
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Plain,
}

/// Worker threads for verification suites.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    #[default]
    Auto,
    Threads(usize),
}

impl FromStr for Parallelism {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "auto" => Ok(Parallelism::Auto),
            t => match t.parse::<usize>() {
                Ok(0) | Err(_) => Err(format!("expected \"auto\" or a positive integer, got {t:?}")),
                Ok(k) => Ok(Parallelism::Threads(k)),
            },
        }
    }
}

impl fmt::Display for Parallelism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parallelism::Auto => f.write_str("auto"),
            Parallelism::Threads(k) => write!(f, "{k}"),
        }
    }
}

impl Serialize for Parallelism {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Parallelism::Auto => s.serialize_str("auto"),
            Parallelism::Threads(k) => s.serialize_u64(*k as u64),
        }
    }
}

impl<'de> Deserialize<'de> for Parallelism {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Count(k) => k.to_string().parse(),
            Raw::Text(t) => t.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub max_rank: usize,
    pub output_format: OutputFormat,
    pub parallelism: Parallelism,
}

impl Default for Config {
    fn default() -> Self {
        Config { cache_dir: default_cache_dir(), max_rank: DEFAULT_MAX_RANK, output_format: OutputFormat::Plain, parallelism: Parallelism::Auto }
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("springergreen"))
}

/// Command-line overrides; `None` keeps the configured value.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub config_file: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub no_cache: bool,
    pub max_rank: Option<usize>,
    pub output_format: Option<OutputFormat>,
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Config, CliError> {
        toml::from_str(text).map_err(|e| CliError::Input(format!("bad config file: {e}")))
    }

    pub fn load(o: &Overrides) -> Result<Config, CliError> {
        let mut cfg = match &o.config_file {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
                Config::from_toml(&text)?
            }
            None => Config::default(),
        };
        if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            cfg.cache_dir = Some(PathBuf::from(dir));
        }
        if let Some(dir) = &o.cache_dir {
            cfg.cache_dir = Some(dir.clone());
        }
        if o.no_cache {
            cfg.cache_dir = None;
        }
        if let Some(r) = o.max_rank {
            cfg.max_rank = r;
        }
        if let Some(f) = o.output_format {
            cfg.output_format = f;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_rank < 1 {
            return Err(CliError::Input("max_rank must be at least 1".into()));
        }
        Ok(())
    }

    pub fn check_rank(&self, n: usize) -> Result<(), CliError> {
        if n > self.max_rank {
            return Err(CliError::Input(format!("rank {n} exceeds max_rank {}", self.max_rank)));
        }
        Ok(())
    }

    /// The cache directory if it exists or can be created; caching is
    /// disabled otherwise.
    pub fn usable_cache_dir(&self) -> Option<&Path> {
        let dir = self.cache_dir.as_deref()?;
        fs::create_dir_all(dir).ok()?;
        let meta = fs::metadata(dir).ok()?;
        (meta.is_dir() && !meta.permissions().readonly()).then_some(dir)
    }
}
