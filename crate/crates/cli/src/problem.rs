use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;

use btchow::chow::{ComputeOptions, ResolutionProblem};
use btchow::groups::{close_group, FiniteActionGroup, SignedPermutation, DEFAULT_GROUP_BOUND};
use btchow::lattice::IntegerMatrix;
use btchow::symalg::DEFAULT_DEGREE_CAP;
use btchow::weil::GammaSet;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A problem file. See the README for the field-by-field description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub group: GroupSpec,
    /// `N` rows of `r` entries; the columns generate `P̂`.
    #[serde(default)]
    pub phat_embedding: Vec<Vec<i64>>,
    #[serde(default = "default_degrees")]
    pub degrees: DegreeRange,
    #[serde(default = "default_tasks")]
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub options: OptionsSpec,
    /// Names for the basis of `Q̂`, used when printing witnesses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    /// One-line notation, 1-based: `perm[i-1]` is the image of `i`.
    pub perm: Vec<usize>,
    /// `±1` per point; all `+1` when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_group_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default)]
    pub oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Task {
    #[serde(rename = "chow")]
    Chow,
    #[serde(rename = "kernel")]
    Kernel,
    #[serde(rename = "cokernel")]
    Cokernel,
    #[serde(rename = "h1-check")]
    H1Check,
    #[serde(rename = "strata")]
    Strata,
}

impl Task {
    pub const ALL: [Task; 5] = [Task::Chow, Task::Kernel, Task::Cokernel, Task::H1Check, Task::Strata];

    pub fn name(self) -> &'static str {
        match self {
            Task::Chow => "chow",
            Task::Kernel => "kernel",
            Task::Cokernel => "cokernel",
            Task::H1Check => "h1-check",
            Task::Strata => "strata",
        }
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task `{s}` (expected one of chow, kernel, cokernel, h1-check, strata)"))
    }
}

/// A task selection given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskList(pub Vec<Task>);

/// Parses a comma-separated task list; `all` selects every task.
pub fn parse_tasks(s: &str) -> Result<TaskList, String> {
    if s.trim() == "all" {
        return Ok(TaskList(Task::ALL.to_vec()));
    }
    let mut tasks: Vec<Task> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>()?;
    tasks.sort();
    tasks.dedup();
    Ok(TaskList(tasks))
}

/// Inclusive degree range, written `a..b` or as a single degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRange {
    pub start: usize,
    pub end: usize,
}

impl DegreeRange {
    pub fn iter(self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl fmt::Display for DegreeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for DegreeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad degree `{t}` in range `{s}`"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let d = num(s)?;
                (d, d)
            }
        };
        if start > end {
            return Err(format!("empty degree range `{s}`"));
        }
        Ok(DegreeRange { start, end })
    }
}

impl Serialize for DegreeRange {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DegreeRange {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn default_degrees() -> DegreeRange {
    DegreeRange { start: 1, end: 3 }
}

fn default_tasks() -> Vec<Task> {
    vec![Task::Chow, Task::Kernel, Task::Cokernel]
}

/// Reads and checks a problem file. Besides the JSON structure this
/// verifies generator shapes, signs and bijectivity, and the embedding's
/// shape, so that every later failure is a genuine validation failure.
pub fn parse_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_problem_str(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_problem_str(text: &str) -> Result<ProblemFile, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: ProblemFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Parse(format!("line {} column {}, at `{path}`: {inner}", inner.line(), inner.column()))
    })?;
    file.check_shape()?;
    Ok(file)
}

impl ProblemFile {
    fn check_shape(&self) -> Result<(), CliError> {
        let n = self.group.degree;
        for (k, g) in self.group.generators.iter().enumerate() {
            let name = k + 1;
            if g.perm.len() != n {
                return Err(CliError::Parse(format!(
                    "generator {name}: permutation has length {}, expected {n}",
                    g.perm.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in &g.perm {
                if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                    return Err(CliError::Parse(format!("generator {name}: {:?} is not a permutation of 1..{n}", g.perm)));
                }
            }
            if let Some(signs) = &g.signs {
                if signs.len() != n {
                    return Err(CliError::Parse(format!(
                        "generator {name}: sign vector has length {}, expected {n}",
                        signs.len()
                    )));
                }
                if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
                    return Err(CliError::Parse(format!("generator {name}: sign {s} is not ±1")));
                }
            }
        }
        if !self.phat_embedding.is_empty() {
            if self.phat_embedding.len() != n {
                return Err(CliError::Parse(format!(
                    "phat_embedding has {} rows, expected {n}",
                    self.phat_embedding.len()
                )));
            }
            let r = self.phat_embedding[0].len();
            if let Some(i) = self.phat_embedding.iter().position(|row| row.len() != r) {
                return Err(CliError::Parse(format!("phat_embedding row {} has a different length", i + 1)));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(CliError::Parse(format!("labels has {} entries, expected {n}", labels.len())));
            }
        }
        Ok(())
    }

    pub fn compute_options(&self) -> ComputeOptions {
        ComputeOptions {
            max_group_order: self.options.max_group_order.unwrap_or(DEFAULT_GROUP_BOUND),
            max_degree: self.options.max_degree.unwrap_or(DEFAULT_DEGREE_CAP),
        }
    }

    pub fn generators(&self) -> Result<Vec<SignedPermutation>, CliError> {
        self.group
            .generators
            .iter()
            .map(|g| {
                let signs = g.signs.clone().unwrap_or_else(|| vec![1; g.perm.len()]);
                SignedPermutation::from_one_line(&g.perm, signs.iter().map(|&s| s as i8).collect())
                    .map_err(CliError::from)
            })
            .collect()
    }

    pub fn build_group(&self, options: ComputeOptions) -> Result<FiniteActionGroup, CliError> {
        Ok(close_group(self.group.degree, &self.generators()?, options.max_group_order)?)
    }

    pub fn embedding(&self) -> IntegerMatrix {
        let n = self.group.degree;
        if self.phat_embedding.is_empty() {
            return IntegerMatrix::zeros(n, 0);
        }
        let rows: Vec<&[i64]> = self.phat_embedding.iter().map(Vec::as_slice).collect();
        IntegerMatrix::from_i64_rows(&rows)
    }

    pub fn resolution(&self, group: FiniteActionGroup) -> ResolutionProblem {
        ResolutionProblem::new(group, self.embedding())
    }

    pub fn gamma_set(&self, group: FiniteActionGroup) -> Result<GammaSet, CliError> {
        Ok(GammaSet::new(group)?)
    }

    pub fn labels(&self) -> Vec<String> {
        self.labels.clone().unwrap_or_else(|| (1..=self.group.degree).map(|i| format!("x{i}")).collect())
    }
}
