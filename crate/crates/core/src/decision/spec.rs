use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{named_axiom, Axiom, Formula};

/// Axioms that may be added on top of `K4Cₙ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extension {
    D,
    T,
    Three,
    M,
    E,
}

impl Extension {
    pub const ALL: [Extension; 5] = [
        Extension::D,
        Extension::T,
        Extension::Three,
        Extension::M,
        Extension::E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Extension::D => "d",
            Extension::T => "t",
            Extension::Three => "three",
            Extension::M => "m",
            Extension::E => "e",
        }
    }

    /// The axiom instance the extension adds.
    pub fn axiom(self) -> Formula {
        named_axiom(match self {
            Extension::D => Axiom::D,
            Extension::T => Axiom::T,
            Extension::Three => Axiom::Point3,
            Extension::M => Axiom::M,
            Extension::E => Axiom::E,
        })
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Extension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d" => Ok(Extension::D),
            "t" => Ok(Extension::T),
            "three" | "3" | ".3" | "point3" => Ok(Extension::Three),
            "m" => Ok(Extension::M),
            "e" => Ok(Extension::E),
            _ => Err(Error::InvalidLogic(format!("unknown extension `{s}`"))),
        }
    }
}

/// `K4Cₙ` plus a set of extension axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LogicSpec {
    n: usize,
    extensions: BTreeSet<Extension>,
}

impl LogicSpec {
    /// `T` over `n = 0` is rejected. Other combinations without finite
    /// frames (such as `D` with `n = 0`) are accepted; their frame stream is
    /// simply empty.
    pub fn new(n: usize, extensions: impl IntoIterator<Item = Extension>) -> Result<LogicSpec> {
        let extensions: BTreeSet<Extension> = extensions.into_iter().collect();
        let has = |e| extensions.contains(&e);
        if has(Extension::T) && n == 0 {
            return Err(Error::ReflexiveWithZeroCircumference);
        }
        Ok(LogicSpec { n, extensions })
    }

    pub fn plain(n: usize) -> LogicSpec {
        LogicSpec {
            n,
            extensions: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn extensions(&self) -> impl Iterator<Item = Extension> + '_ {
        self.extensions.iter().copied()
    }

    pub fn has(&self, e: Extension) -> bool {
        self.extensions.contains(&e)
    }
}

impl fmt::Display for LogicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K4C{}", self.n)?;
        for e in &self.extensions {
            write!(f, "+{e}")?;
        }
        Ok(())
    }
}
