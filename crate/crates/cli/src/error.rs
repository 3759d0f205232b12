use eqcoh_core::burnside::BurnsideError;
use eqcoh_core::catalog::CatalogError;
use eqcoh_core::degree::DegreeError;
use eqcoh_core::group::GroupError;
use eqcoh_core::poly::PolyError;
use eqcoh_core::rational::ParseRationalError;
use eqcoh_core::rep::RepError;
use eqcoh_core::schwartz::SchwartzError;

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CERTIFICATION: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
    Certification(String),
    Selftest(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Certification(_) => EXIT_CERTIFICATION,
            CliError::Selftest(_) => EXIT_SELFTEST,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
            CliError::Certification(_) => "certification",
            CliError::Selftest(_) => "selftest",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) | CliError::Certification(m) | CliError::Selftest(m) => m,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} error: {}", self.kind(), self.message())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(format!("ParseError: {e}"))
    }
}

impl From<ParseRationalError> for CliError {
    fn from(e: ParseRationalError) -> Self {
        CliError::Parse(format!("ParseError: {e}"))
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse(_) => CliError::Parse(e.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::Parse(p) => p.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<DegreeError> for CliError {
    fn from(e: DegreeError) -> Self {
        if e.is_certification_failure() {
            CliError::Certification(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

impl From<SchwartzError> for CliError {
    fn from(e: SchwartzError) -> Self {
        match e {
            SchwartzError::Parse(_) => CliError::Parse(e.to_string()),
            SchwartzError::Poly(p) => p.into(),
            SchwartzError::Rep(r) => r.into(),
            e if e.is_certification_failure() => CliError::Certification(e.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

macro_rules! domain_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        })*
    };
}

domain_error!(BurnsideError, CatalogError, GroupError);
