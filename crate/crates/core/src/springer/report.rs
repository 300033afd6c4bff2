use std::fmt::Display;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::weylchar::ClassFunction;

/// One checked instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub lambda: String,
    pub param: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl Case {
    pub fn ok(lambda: impl Into<String>, param: impl Into<String>) -> Case {
        Case { lambda: lambda.into(), param: param.into(), pass: true, witness: None, lhs: None, rhs: None }
    }

    pub fn fail(lambda: impl Into<String>, param: impl Into<String>, witness: impl Into<String>) -> Case {
        Case {
            lambda: lambda.into(),
            param: param.into(),
            pass: false,
            witness: Some(witness.into()),
            lhs: None,
            rhs: None,
        }
    }

    pub fn error(lambda: impl Into<String>, param: impl Into<String>, e: &Error) -> Case {
        Case::fail(lambda, param, format!("error: {e}"))
    }

    /// Compares two class functions; the witness is the first class where
    /// they differ.
    pub fn functions(
        lambda: impl Into<String>,
        param: impl Into<String>,
        lhs: &ClassFunction,
        rhs: &ClassFunction,
    ) -> Case {
        if lhs.group() != rhs.group() {
            let mut c = Case::fail(lambda, param, "groups differ");
            c.lhs = Some(lhs.group().to_string());
            c.rhs = Some(rhs.group().to_string());
            return c;
        }
        match lhs.first_difference(rhs) {
            None => Case::ok(lambda, param),
            Some(class) => {
                let mut c = Case::fail(lambda, param, format!("class {class}"));
                c.lhs = lhs.value(&class).ok().map(|v| v.to_string());
                c.rhs = rhs.value(&class).ok().map(|v| v.to_string());
                c
            }
        }
    }

    pub fn values<T: PartialEq + Display>(lambda: impl Into<String>, param: impl Into<String>, lhs: T, rhs: T) -> Case {
        if lhs == rhs {
            Case::ok(lambda, param)
        } else {
            let mut c = Case::fail(lambda, param, "values differ");
            c.lhs = Some(lhs.to_string());
            c.rhs = Some(rhs.to_string());
            c
        }
    }
}

/// The outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub n: usize,
    pub cases: Vec<Case>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(suite: &str, ty: impl Display, n: usize, cases: Vec<Case>, elapsed: Duration) -> Report {
        Report { suite: suite.to_string(), ty: ty.to_string(), n, cases, elapsed }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{} {}{}: {}/{} cases pass",
            self.suite,
            self.ty,
            self.n,
            self.cases.len() - failed,
            self.cases.len()
        )
    }
}
