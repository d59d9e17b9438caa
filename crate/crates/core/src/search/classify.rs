use std::fmt;

use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::exactnum::{kth_power_root, Rational};
use crate::tuples::canonical_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingClass {
    Triple,
    AlmostQuadruple,
    Quadruple,
}

impl fmt::Display for FindingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FindingClass::Triple => "triple",
            FindingClass::AlmostQuadruple => "almost_quadruple",
            FindingClass::Quadruple => "quadruple",
        })
    }
}

/// Root evidence for `elements[i] * elements[j] + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEvidence {
    pub pair: (usize, usize),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourth_root: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square_root: Option<Rational>,
}

/// Where a finding came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub a: Rational,
    pub b: Rational,
    pub pair_root: Rational,
    pub a_index: u64,
    /// `extension` or `genus1`.
    pub via: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub class: FindingClass,
    /// Canonical order: ascending `(height, value)`.
    pub elements: Vec<Rational>,
    pub roots: Vec<PairEvidence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Provenance>,
}

impl Finding {
    pub fn evidence_for(&self, x: &Rational, y: &Rational) -> Option<&PairEvidence> {
        let i = self.elements.iter().position(|e| e == x)?;
        let j = self.elements.iter().position(|e| e == y)?;
        let key = (i.min(j), i.max(j));
        self.roots.iter().find(|e| e.pair == key)
    }

    pub fn fourth_root_of(&self, x: &Rational, y: &Rational) -> Option<&Rational> {
        self.evidence_for(x, y)?.fourth_root.as_ref()
    }

    pub fn contains_all(&self, other: &[Rational]) -> bool {
        other.iter().all(|x| self.elements.contains(x))
    }
}

fn evidence(elements: &[Rational]) -> Vec<PairEvidence> {
    let one = Rational::one();
    let mut out = Vec::new();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let value = &elements[i] * &elements[j] + &one;
            let fourth_root = kth_power_root(&value, 4);
            let square_root = match &fourth_root {
                Some(f) => Some(f.pow(2)),
                None => kth_power_root(&value, 2),
            };
            out.push(PairEvidence { pair: (i, j), fourth_root, square_root });
        }
    }
    out
}

/// Quartic classification of a 3- or 4-element candidate set.
///
/// * quadruple: all six products plus one are fourth powers;
/// * almost quadruple: exactly five are fourth powers; the sixth carries
///   square evidence when it happens to be a square;
/// * triple: some 3-subset has all three products plus one fourth powers.
///   For a 4-element input the first such subset in canonical order is
///   returned.
pub fn classify_finding(elements: &[Rational]) -> Result<Finding, SearchError> {
    let canon = canonical_order(elements);
    let valid_shape = matches!(canon.len(), 3 | 4)
        && canon.iter().all(|x| !x.is_zero())
        && canon.windows(2).all(|w| w[0] != w[1]);
    if !valid_shape {
        return Err(SearchError::NotAFinding);
    }
    let roots = evidence(&canon);
    let fourth = roots.iter().filter(|e| e.fourth_root.is_some()).count();
    let class = match (canon.len(), fourth) {
        (3, 3) => Some(FindingClass::Triple),
        (4, 6) => Some(FindingClass::Quadruple),
        (4, 5) => Some(FindingClass::AlmostQuadruple),
        _ => None,
    };
    if let Some(class) = class {
        return Ok(Finding { class, elements: canon, roots, source: None });
    }
    if canon.len() == 4 {
        for skip in (0..4).rev() {
            let sub: Vec<Rational> = canon
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, x)| x.clone())
                .collect();
            if let Ok(triple) = classify_finding(&sub) {
                return Ok(triple);
            }
        }
    }
    Err(SearchError::NotAFinding)
}
