//! Chaos prediction for rule-90/150 vectors from per-rule information flow.
//!
//! A perturbed cell passes information to a neighbor when that neighbor's
//! update is sensitive to it (propagation); the round trip back through the
//! cell's own persistence is the cooking component. Both probabilities are
//! counted over the 8 neighborhood min-terms of the rule rather than
//! hard-coded. The aggregate (p1, p2) pair predicts chaotic behavior, with
//! (0.75, 0.5) as the customary thresholds.
//!
//! Only the rule-90/150 specialization is implemented; the general
//! non-uniform-CA flow analysis is out of scope here.

use crate::ca::{CaError, CellRule, RuleVector};

/// Per-rule information-flow probabilities, each a fraction of the 8
/// neighborhood min-terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowProfile {
    pub rule: u16,
    pub propagates_left: f64,
    pub propagates_right: f64,
    pub cooks_left: f64,
    pub cooks_right: f64,
}

fn rule_output(rule: CellRule, left: bool, center: bool, right: bool) -> bool {
    match rule {
        CellRule::Rule90 => left ^ right,
        CellRule::Rule150 => left ^ center ^ right,
    }
}

/// Flow probabilities of a single rule, derived by min-term enumeration:
/// propagation toward a side counts the neighborhoods where flipping that
/// side's source neighbor flips the output; cooking additionally flips the
/// cell itself, so a self-term that echoes the perturbation cancels the
/// returned information.
pub fn rule_flow(rule: u16) -> Result<FlowProfile, CaError> {
    let r = match rule {
        90 => CellRule::Rule90,
        150 => CellRule::Rule150,
        other => return Err(CaError::UnsupportedRule(other)),
    };
    let mut prop_left = 0usize; // perturbation arriving from the right neighbor
    let mut prop_right = 0usize;
    let mut cook_left = 0usize;
    let mut cook_right = 0usize;
    for minterm in 0..8u8 {
        let left = minterm & 4 != 0;
        let center = minterm & 2 != 0;
        let right = minterm & 1 != 0;
        let base = rule_output(r, left, center, right);
        if base != rule_output(r, left, center, !right) {
            prop_left += 1;
        }
        if base != rule_output(r, !left, center, right) {
            prop_right += 1;
        }
        if base != rule_output(r, left, !center, !right) {
            cook_left += 1;
        }
        if base != rule_output(r, !left, !center, right) {
            cook_right += 1;
        }
    }
    Ok(FlowProfile {
        rule,
        propagates_left: prop_left as f64 / 8.0,
        propagates_right: prop_right as f64 / 8.0,
        cooks_left: cook_left as f64 / 8.0,
        cooks_right: cook_right as f64 / 8.0,
    })
}

/// Aggregates per-cell flow into the chaos pair:
/// p1 = min over cells of the larger propagation direction;
/// p2 = min over cells of min over directions of max(propagation, cooking).
pub fn p_parameter(rv: &RuleVector) -> (f64, f64) {
    let mut p1 = f64::INFINITY;
    let mut p2 = f64::INFINITY;
    for cell in rv.cells() {
        let flow = rule_flow(cell.number()).expect("rule vector only holds 90/150");
        p1 = p1.min(flow.propagates_left.max(flow.propagates_right));
        let left = flow.propagates_left.max(flow.cooks_left);
        let right = flow.propagates_right.max(flow.cooks_right);
        p2 = p2.min(left.min(right));
    }
    (p1, p2)
}

/// The customary chaos thresholds on (p1, p2).
pub fn is_chaotic_candidate(rv: &RuleVector) -> bool {
    let (p1, p2) = p_parameter(rv);
    p1 >= 0.75 && p2 >= 0.5
}
