//! File formats: system descriptions and path descriptions, both JSON.

use serde::{Deserialize, Serialize};

use coxwalls_core::{Caps, CoxeterSystem, EdgePath, SolverKind};

use crate::CliError;

/// System file: generator names and the order matrix, 0 encoding infinity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemFile {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
}

impl SystemFile {
    pub fn parse(bytes: &[u8], origin: &str) -> Result<Self, CliError> {
        let file: SystemFile = serde_json::from_slice(bytes).map_err(|e| {
            CliError::input(format!(
                "{origin}: line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        let n = file.generators.len();
        if file.matrix.len() != n {
            return Err(CliError::input(format!(
                "{origin}: field \"matrix\" has {} rows for {n} generators",
                file.matrix.len()
            )));
        }
        for (i, row) in file.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::input(format!(
                    "{origin}: field \"matrix\" row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(CliError::input(format!(
                        "{origin}: field \"matrix\" diagonal entry ({i},{i}) must be 1"
                    )));
                }
                if i != j && m == 1 {
                    return Err(CliError::input(format!(
                        "{origin}: field \"matrix\" entry ({i},{j}) is 1 off the diagonal"
                    )));
                }
                if file.matrix[j][i] != m {
                    return Err(CliError::input(format!(
                        "{origin}: matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(file)
    }

    pub fn build(&self, caps: Caps, origin: &str) -> Result<CoxeterSystem, CliError> {
        CoxeterSystem::with_config(
            self.generators.clone(),
            self.matrix.clone(),
            caps,
            SolverKind::default(),
        )
        .map_err(|e| CliError::input(format!("{origin}: {e}")))
    }
}

/// Letters may be a concatenated string of single-character generator names
/// or an explicit array of names.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LetterSpec {
    Joined(String),
    Names(Vec<String>),
}

impl LetterSpec {
    pub fn to_letters(&self, sys: &CoxeterSystem, origin: &str) -> Result<Vec<u8>, CliError> {
        match self {
            LetterSpec::Joined(text) => Ok(sys
                .word_from_names(text)
                .map_err(|e| CliError::input(format!("{origin}: field \"letters\": {e}")))?
                .letters()
                .to_vec()),
            LetterSpec::Names(names) => {
                let mut letters = Vec::with_capacity(names.len());
                for name in names {
                    let idx = sys
                        .generator_names()
                        .iter()
                        .position(|g| g == name)
                        .ok_or_else(|| {
                            CliError::input(format!(
                                "{origin}: field \"letters\": unknown generator name {name:?}"
                            ))
                        })?;
                    letters.push(idx as u8);
                }
                Ok(letters)
            }
        }
    }
}

/// Path file: a start word and a letter sequence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathFile {
    #[serde(default)]
    pub start: String,
    pub letters: LetterSpec,
}

impl PathFile {
    pub fn parse(bytes: &[u8], origin: &str) -> Result<Self, CliError> {
        serde_json::from_slice(bytes).map_err(|e| {
            CliError::input(format!(
                "{origin}: line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn build(&self, sys: &CoxeterSystem, origin: &str) -> Result<EdgePath, CliError> {
        let start_word = sys
            .word_from_names(&self.start)
            .map_err(|e| CliError::input(format!("{origin}: field \"start\": {e}")))?;
        let start = sys
            .normal_form(&start_word)
            .map_err(|e| CliError::input(format!("{origin}: field \"start\": {e}")))?;
        let letters = self.letters.to_letters(sys, origin)?;
        Ok(EdgePath::new(start, letters))
    }
}
