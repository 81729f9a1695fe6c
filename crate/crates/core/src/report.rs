//! The analysis report: one serde value behind both the JSON output and the
//! human-readable text, so the two cannot drift apart.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::monomial::IndexSet;
use crate::polymatroid::VeroneseParams;
use crate::veronese::{CmClass, EquidimEvidence, NormalForm, PairReport, WitnessedPrime};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputRecord {
    Veronese(VeroneseParams),
    Bases { bases: Vec<Vec<u32>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidimSection {
    pub verdict: bool,
    pub cover_cardinality: Option<usize>,
    /// Index sets inside are core indices (see `normal_form.order`).
    pub evidence: EquidimEvidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmixedSection {
    pub verdict: bool,
    /// Associated primes `P_A ⊊ P_B` exhibiting an embedded component.
    pub embedded: Option<(IndexSet, IndexSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolymatroidSection {
    pub size: usize,
    pub rank: u64,
    pub exchange: bool,
    pub strong_exchange: bool,
    /// Componentwise minimum subtracted by the translation, when strong.
    pub offset: Option<Vec<u32>>,
    /// Veronese parameters of the translated base set, when strong.
    pub translated: Option<VeroneseParams>,
    /// `G(sqrt I)` from the ground-set rank function.
    pub radical_via_rank: Vec<IndexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub checked: Vec<String>,
    pub agreed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub input: InputRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polymatroid: Option<PolymatroidSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<NormalForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<Vec<IndexSet>>,
    /// Borel generators of the core radical, in core indices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub borel: Option<Vec<IndexSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equidimensional: Option<EquidimSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_pair: Option<PairReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associated_primes: Option<Vec<WitnessedPrime>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unmixed: Option<UnmixedSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<CmClass>,
    /// Alexander dual of the radical: its generators are the minimal
    /// vertex covers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<Vec<IndexSet>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

impl Report {
    pub fn new(input: InputRecord) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            input,
            polymatroid: None,
            normal_form: None,
            radical: None,
            borel: None,
            m: None,
            b: None,
            equidimensional: None,
            maximal_pair: None,
            associated_primes: None,
            unmixed: None,
            class: None,
            dual: None,
            oracle: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// False only when the oracle ran and disagreed.
    pub fn agreed(&self) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.agreed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.input {
            InputRecord::Veronese(p) => {
                let _ = writeln!(out, "I_{{{p}}} in {} variables", p.nvars());
            }
            InputRecord::Bases { bases } => {
                let _ = writeln!(out, "polymatroidal ideal of {} bases", bases.len());
            }
        }
        if let Some(pm) = &self.polymatroid {
            let _ = writeln!(
                out,
                "bases: {} of rank {}; exchange {}, strong exchange {}",
                pm.size, pm.rank, pm.exchange, pm.strong_exchange
            );
            if let (Some(offset), Some(t)) = (&pm.offset, &pm.translated) {
                let _ = writeln!(out, "translation: offset {offset:?} gives I_{{{t}}}");
            }
            let _ = writeln!(out, "radical via rank: {}", monomials(&pm.radical_via_rank));
        }
        if let Some(nf) = &self.normal_form {
            let core = nf
                .core
                .as_ref()
                .map_or_else(|| "none".to_string(), |c| format!("I_{{{c}}}"));
            let _ = writeln!(
                out,
                "normal form: core {core}, core variables {:?}, peeled {}, trimmed {}",
                nf.order, nf.peeled, nf.trimmed
            );
        }
        if let Some(radical) = &self.radical {
            let _ = writeln!(out, "radical: {}", monomials(radical));
        }
        if let Some(borel) = &self.borel {
            let _ = writeln!(out, "borel generators: {}", monomials(borel));
        }
        if let (Some(m), Some(b)) = (self.m, self.b) {
            let _ = writeln!(out, "m = {m}, b = {b}");
        }
        if let Some(eq) = &self.equidimensional {
            match eq.cover_cardinality {
                Some(c) if eq.verdict => {
                    let _ = writeln!(
                        out,
                        "equidimensional: true (every minimal vertex cover has size {c})"
                    );
                }
                _ => {
                    let _ = writeln!(out, "equidimensional: {}", eq.verdict);
                }
            }
            let _ = writeln!(out, "  evidence: {}", evidence_text(&eq.evidence));
        }
        if let Some(pair) = &self.maximal_pair {
            match pair.pair {
                Some((p, l)) => {
                    let _ = writeln!(
                        out,
                        "maximal pair: (p, l) = ({p}, {l}); violations: {}",
                        if pair.violations.is_empty() {
                            "none".to_string()
                        } else {
                            monomials(&pair.violations)
                        }
                    );
                }
                None => {
                    let _ = writeln!(out, "maximal pair: none");
                }
            }
        }
        if let Some(primes) = &self.associated_primes {
            let _ = writeln!(out, "associated primes ({}):", primes.len());
            for w in primes {
                let _ = writeln!(
                    out,
                    "  {} = I : {}",
                    w.indices.prime_string(),
                    witness_text(w)
                );
            }
        }
        if let Some(un) = &self.unmixed {
            match un.embedded {
                Some((small, big)) => {
                    let _ = writeln!(
                        out,
                        "unmixed: {} ({} is embedded in {})",
                        un.verdict,
                        small.prime_string(),
                        big.prime_string()
                    );
                }
                None => {
                    let _ = writeln!(out, "unmixed: {}", un.verdict);
                }
            }
        }
        if let Some(class) = self.class {
            let _ = writeln!(
                out,
                "class: {class:?} (Cohen-Macaulay: {})",
                class.is_cohen_macaulay()
            );
        }
        if let Some(dual) = &self.dual {
            let _ = writeln!(out, "alexander dual: {}", monomials(dual));
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle: {} on {}",
                if o.agreed { "agreed" } else { "DISAGREED" },
                o.checked.join(", ")
            );
            for d in &o.discrepancies {
                let _ = writeln!(out, "  discrepancy: {d}");
            }
        }
        out
    }
}

fn monomials(sets: &[IndexSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.monomial_string()).collect();
    format!("{} [{}]", parts.join(", "), sets.len())
}

fn witness_text(w: &WitnessedPrime) -> String {
    if w.witness.is_one() {
        "1".to_string()
    } else {
        w.witness.to_string()
    }
}

fn evidence_text(e: &EquidimEvidence) -> String {
    match e {
        EquidimEvidence::PureVeronese => "every nonzero cap reaches the degree".to_string(),
        EquidimEvidence::PrimeRadical => "the radical is prime".to_string(),
        EquidimEvidence::Holds { top_borel } => format!(
            "unique top Borel generator {} and no gap above m - b",
            top_borel.monomial_string()
        ),
        EquidimEvidence::TopBorelMismatch { expected, found } => format!(
            "top Borel generators {} instead of {}",
            monomials(found),
            expected.monomial_string()
        ),
        EquidimEvidence::GapExceeded {
            generator,
            gap,
            bound,
        } => format!(
            "generator {} has max - deg = {gap} > {bound}",
            generator.monomial_string()
        ),
    }
}
