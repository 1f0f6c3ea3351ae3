use std::fmt;
use std::io::Read;
use std::path::Path;

use clap::Args;
use k4c_core::algebra::{parse_sentence, ModalAlgebra, UniversalSentence};
use k4c_core::formula::{named_axiom, parse, scheme_instance, Axiom};
use k4c_core::json::{AlgebraJson, FrameJson, ModelJson, SpaceJson};
use k4c_core::topology::{alexandroff, FiniteSpace};
use k4c_core::{Formula, Frame, Model};
use serde::de::DeserializeOwned;

/// Bad input of any kind; reported on stderr with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<k4c_core::Error> for InputError {
    fn from(e: k4c_core::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<k4c_core::formula::ParseError> for InputError {
    fn from(e: k4c_core::formula::ParseError) -> Self {
        InputError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

/// Reads a file, or standard input for `-`.
pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("reading {}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// A model file; a bare frame file (no `valuation`) is a model with every
/// variable false.
pub fn read_model(path: &Path) -> Result<Model> {
    let j: ModelJson = read_json(path)?;
    Ok(Model::try_from(&j)?)
}

pub fn read_frame(path: &Path) -> Result<Frame> {
    let j: FrameJson = read_json(path)?;
    Ok(Frame::try_from(&j)?)
}

/// A space file, or a frame file read as a quasi-order.
pub fn read_space(path: &Path) -> Result<FiniteSpace> {
    let v: serde_json::Value = read_json(path)?;
    if v.get("edges").is_some() {
        let j: FrameJson = serde_json::from_value(v).map_err(|e| InputError(e.to_string()))?;
        return Ok(alexandroff(&Frame::try_from(&j)?)?);
    }
    let j: SpaceJson = serde_json::from_value(v).map_err(|e| InputError(e.to_string()))?;
    Ok(FiniteSpace::try_from(&j)?)
}

pub fn read_algebra(path: &Path) -> Result<ModalAlgebra> {
    let j: AlgebraJson = read_json(path)?;
    Ok(ModalAlgebra::try_from(&j)?)
}

/// Where a formula comes from: inline, a file, a named axiom, or a scheme
/// at fresh variables.
#[derive(Args, Debug, Clone, Default)]
pub struct FormulaArgs {
    /// Formula text, e.g. "box p0 -> box box p0".
    #[arg(long, short = 'f')]
    pub formula: Option<String>,
    /// File holding the formula text ("-" for standard input).
    #[arg(long)]
    pub formula_file: Option<std::path::PathBuf>,
    /// Named axiom: k, four, wfour, t, d, lob, lobdual, grz, grzbox, digrz, m, mequiv, e, point3.
    #[arg(long)]
    pub axiom: Option<String>,
    /// Scheme name: d, p, c or cstar, instantiated at p0..pn.
    #[arg(long)]
    pub scheme: Option<String>,
    /// Index of the scheme; defaults to --n where the command has one.
    #[arg(long)]
    pub scheme_n: Option<usize>,
}

impl FormulaArgs {
    pub fn given(&self) -> bool {
        self.formula.is_some()
            || self.formula_file.is_some()
            || self.axiom.is_some()
            || self.scheme.is_some()
    }

    pub fn resolve(&self, default_n: Option<usize>) -> Result<Formula> {
        let sources = [
            self.formula.is_some(),
            self.formula_file.is_some(),
            self.axiom.is_some(),
            self.scheme.is_some(),
        ];
        match sources.iter().filter(|&&b| b).count() {
            0 => {
                return Err(InputError(
                    "give one of --formula, --formula-file, --axiom, --scheme".into(),
                ))
            }
            1 => {}
            _ => {
                return Err(InputError(
                    "give only one of --formula, --formula-file, --axiom, --scheme".into(),
                ))
            }
        }
        if let Some(text) = &self.formula {
            return Ok(parse(text)?);
        }
        if let Some(path) = &self.formula_file {
            return Ok(parse(read_text(path)?.trim())?);
        }
        if let Some(name) = &self.axiom {
            let a: Axiom = name.parse()?;
            return Ok(named_axiom(a));
        }
        let name = self.scheme.as_deref().expect("one source is set");
        let n = self
            .scheme_n
            .or(default_n)
            .ok_or_else(|| InputError("--scheme needs --scheme-n".into()))?;
        Ok(scheme_instance(name, n)?)
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct SentenceArgs {
    /// Universal sentence, e.g. "forall p . (box p = p | !(p = top))".
    #[arg(long)]
    pub sentence: Option<String>,
    /// File holding the sentence ("-" for standard input).
    #[arg(long)]
    pub sentence_file: Option<std::path::PathBuf>,
}

impl SentenceArgs {
    pub fn given(&self) -> bool {
        self.sentence.is_some() || self.sentence_file.is_some()
    }

    pub fn resolve(&self) -> Result<UniversalSentence> {
        match (&self.sentence, &self.sentence_file) {
            (Some(s), None) => Ok(parse_sentence(s)?),
            (None, Some(p)) => Ok(parse_sentence(read_text(p)?.trim())?),
            _ => Err(InputError(
                "give exactly one of --sentence, --sentence-file".into(),
            )),
        }
    }
}
