use std::path::PathBuf;
use std::str::FromStr;

use ball_kmeans::InitMethod;

use crate::error::CliError;

/// Which algorithm(s) a run executes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Ball,
    Lloyd,
    /// Run both and verify they agree iteration for iteration.
    Both,
}

impl FromStr for Algorithm {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ball" => Ok(Self::Ball),
            "lloyd" => Ok(Self::Lloyd),
            "both" => Ok(Self::Both),
            other => Err(CliError::Usage(format!(
                "unknown algorithm {other:?}, expected ball|lloyd|both"
            ))),
        }
    }
}

/// Synthetic-mixture parameters, parsed from `n,d,k,sep`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerateSpec {
    pub n: usize,
    pub d: usize,
    pub k_true: usize,
    pub separation: f64,
}

impl FromStr for GenerateSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(CliError::Usage(format!(
                "generator spec {s:?} must be n,d,k,sep"
            )));
        }
        let bad = |what: &str| CliError::Usage(format!("bad {what} in generator spec {s:?}"));
        Ok(Self {
            n: parts[0].trim().parse().map_err(|_| bad("point count"))?,
            d: parts[1].trim().parse().map_err(|_| bad("dimensionality"))?,
            k_true: parts[2].trim().parse().map_err(|_| bad("component count"))?,
            separation: parts[3].trim().parse().map_err(|_| bad("separation"))?,
        })
    }
}

/// Fully resolved configuration of one `run` invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub generate: Option<GenerateSpec>,
    pub k: usize,
    pub algorithm: Algorithm,
    pub init: InitMethod,
    pub seed: u64,
    pub max_iter: usize,
    pub freezing: bool,
    pub bound_skipping: bool,
    /// 0 means one thread per core.
    pub workers: usize,
    pub out_dir: PathBuf,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        match (&self.input, &self.generate) {
            (Some(_), Some(_)) => {
                Err(CliError::Usage("--input and --generate are mutually exclusive".into()))
            }
            (None, None) => {
                Err(CliError::Usage("either --input or --generate is required".into()))
            }
            _ => {
                if self.k == 0 {
                    return Err(CliError::Usage("--k must be at least 1".into()));
                }
                if self.max_iter == 0 {
                    return Err(CliError::Usage("--max-iter must be at least 1".into()));
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_spec_parses() {
        let spec: GenerateSpec = "50000,8,50,6".parse().unwrap();
        assert_eq!(spec, GenerateSpec { n: 50000, d: 8, k_true: 50, separation: 6.0 });
        assert!("50000,8,50".parse::<GenerateSpec>().is_err());
        assert!("a,8,50,6".parse::<GenerateSpec>().is_err());
    }

    #[test]
    fn algorithm_parses() {
        assert_eq!("ball".parse::<Algorithm>().unwrap(), Algorithm::Ball);
        assert_eq!("both".parse::<Algorithm>().unwrap(), Algorithm::Both);
        assert!("fast".parse::<Algorithm>().is_err());
    }
}
