//! Executable claim suites and their reports.
//!
//! Each claim is an exact check with a structured witness. Claims run
//! independently (in parallel when enabled) and are merged in `claim_id`
//! order, so a report depends only on the suite options.

mod suites;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::holonomy::Normalization;
use crate::par::Exec;

pub const MAX_N_CAP: usize = 16;
pub const DEFAULT_MAX_N: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Clifford,
    Riemannian,
    Lorentzian,
    Kahler,
    Neutral,
    Spinc,
    All,
}

impl SuiteName {
    pub const ALL: [SuiteName; 7] = [
        SuiteName::Clifford,
        SuiteName::Riemannian,
        SuiteName::Lorentzian,
        SuiteName::Kahler,
        SuiteName::Neutral,
        SuiteName::Spinc,
        SuiteName::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Clifford => "clifford",
            SuiteName::Riemannian => "riemannian",
            SuiteName::Lorentzian => "lorentzian",
            SuiteName::Kahler => "kahler",
            SuiteName::Neutral => "neutral",
            SuiteName::Spinc => "spinc",
            SuiteName::All => "all",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SuiteName::ALL.iter().map(|n| n.as_str()).collect();
                Error::InvalidParams(format!(
                    "unknown suite `{s}`; usage: verify --suite <{}>",
                    names.join("|")
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteSpec {
    pub name: SuiteName,
    pub normalization: Normalization,
    pub max_n: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl SuiteSpec {
    pub fn new(name: SuiteName) -> Self {
        Self {
            name,
            normalization: Normalization::Half,
            max_n: DEFAULT_MAX_N,
            seed: 0,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub claim_id: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: SuiteName,
    pub seed: u64,
    pub normalization: Normalization,
    pub max_n: usize,
    pub overall: bool,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} (seed {}, normalization {}, max_n {})\n",
            self.suite, self.seed, self.normalization, self.max_n
        );
        for c in &self.claims {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}: {}\n", c.claim_id, c.anchor));
        }
        let passed = self.claims.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "overall: {} ({passed}/{} claims)\n",
            if self.overall { "PASS" } else { "FAIL" },
            self.claims.len()
        ));
        out
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.claim_id == id)
    }
}

/// Shared state for one suite run: options, seeded randomness, coverage.
pub struct Ctx {
    pub spec: SuiteSpec,
    touched: Mutex<BTreeSet<&'static str>>,
}

impl Ctx {
    fn new(spec: SuiteSpec) -> Self {
        Self {
            spec,
            touched: Mutex::new(BTreeSet::new()),
        }
    }

    /// Records that a public operation was exercised.
    pub fn touch(&self, op: &'static str) {
        self.touched.lock().expect("coverage lock").insert(op);
    }

    fn touched(&self) -> BTreeSet<&'static str> {
        self.touched.lock().expect("coverage lock").clone()
    }

    /// A generator keyed by the seed and a per-claim salt, so results do not
    /// depend on which claims run or in what order.
    pub fn rng(&self, salt: &str) -> ChaCha8Rng {
        let h = salt.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
        });
        ChaCha8Rng::seed_from_u64(self.spec.seed ^ h)
    }

    pub fn norm(&self) -> Normalization {
        self.spec.normalization
    }

    pub fn exec(&self) -> Exec {
        self.spec.exec
    }
}

type Check = fn(&Ctx) -> Result<(bool, Value)>;

struct ClaimDef {
    id: &'static str,
    anchor: &'static str,
    run: Check,
}

/// Public operations that `verify --suite all` must exercise.
pub const REQUIRED_OPERATIONS: &[&str] = &[
    "exact.parse_scalar",
    "exact.rref",
    "exact.kernel",
    "exact.intersect",
    "exact.char_poly",
    "exact.gaussian_roots",
    "clifford.build_rep",
    "clifford.vector_action",
    "clifford.two_form_action",
    "clifford.half_spinor_split",
    "clifford.witt_frame",
    "clifford.lorentz_split",
    "holonomy.so_basis",
    "holonomy.lambda_star",
    "holonomy.unitary_family",
    "holonomy.form_stabilizer",
    "holonomy.sim_algebra",
    "holonomy.neutral_algebra",
    "holonomy.derived_algebra",
    "holonomy.lie_closure_check",
    "holonomy.parse_algebra",
    "invariant.joint_kernel",
    "invariant.invariant_lines",
    "invariant.line_count",
    "invariant.spinc_exists",
    "spin_geometry.hermitian_form",
    "spin_geometry.dirac_current",
    "spin_geometry.t_space",
    "spin_geometry.induced_complex_structure",
    "spin_geometry.kahler_spectrum",
    "spin_geometry.neutral_action",
];

fn run_defs(ctx: &Ctx, defs: &[ClaimDef]) -> Vec<Claim> {
    ctx.exec().map(defs, |d| {
        let (pass, witness) = match (d.run)(ctx) {
            Ok(r) => r,
            Err(e) => (false, serde_json::json!({ "error": e.to_string() })),
        };
        Claim {
            claim_id: d.id.to_string(),
            anchor: d.anchor.to_string(),
            pass,
            witness,
        }
    })
}

pub fn run_suite(spec: SuiteSpec) -> Result<Report> {
    if spec.max_n == 0 || spec.max_n > MAX_N_CAP {
        return Err(Error::InvalidParams(format!(
            "max_n must be in 1..={MAX_N_CAP}, got {}",
            spec.max_n
        )));
    }
    let ctx = Ctx::new(spec);
    let defs: Vec<ClaimDef> = match spec.name {
        SuiteName::All => SuiteName::ALL
            .iter()
            .filter(|n| **n != SuiteName::All)
            .flat_map(|n| suites::definitions(*n))
            .collect(),
        n => suites::definitions(n),
    };
    let mut claims = run_defs(&ctx, &defs);
    if spec.name == SuiteName::All {
        ctx.touch("verify.run_suite");
        let touched = ctx.touched();
        let missing: Vec<&str> = REQUIRED_OPERATIONS
            .iter()
            .copied()
            .filter(|op| !touched.contains(op))
            .collect();
        claims.push(Claim {
            claim_id: "verify.coverage".into(),
            anchor: "every public operation is exercised by the full suite".into(),
            pass: missing.is_empty(),
            witness: serde_json::json!({ "required": REQUIRED_OPERATIONS.len(), "missing": missing }),
        });
    }
    claims.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    let overall = claims.iter().all(|c| c.pass);
    Ok(Report {
        suite: spec.name,
        seed: spec.seed,
        normalization: spec.normalization,
        max_n: spec.max_n,
        overall,
        claims,
    })
}
