//! One-shot structural summary of a skew brace.

use serde::Serialize;

use crate::brace::{
    characteristic_ideals, classify_subset, decompose_as_power_of_simple, fix, is_meta_trivial, is_simple,
    ker_lambda, left_ideals, right_nilpotency_class, right_series, socle, IdealReport, SkewBrace,
};
use crate::group::identify_group;
use crate::subset::Subset;

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    /// Catalog name, when the group is one of the named groups.
    pub name: Option<String>,
    pub abelian: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerDecomposition {
    pub simple_order: usize,
    pub exponent: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub order: usize,
    pub additive: GroupSummary,
    pub multiplicative: GroupSummary,
    pub trivial: bool,
    pub left_brace: bool,
    /// Every left ideal with its flags; strong left ideals and ideals are flagged subsets of this list.
    pub left_ideals: Vec<IdealReport>,
    pub ker_lambda: Subset,
    pub socle: Subset,
    pub fix: Subset,
    pub right_series: Vec<Subset>,
    pub right_nilpotency_class: Option<usize>,
    pub meta_trivial: bool,
    pub simple: bool,
    pub characteristic_ideals: Vec<Subset>,
    pub characteristically_simple: bool,
    pub power_of_simple: Option<PowerDecomposition>,
}

fn summary(g: &crate::group::GroupTable) -> GroupSummary {
    GroupSummary { order: g.order(), name: identify_group(g), abelian: g.is_abelian() }
}

pub fn analyze(a: &SkewBrace) -> AnalyzeReport {
    let chars = characteristic_ideals(a);
    let characteristically_simple = chars.iter().all(|s| s.is_zero() || s.is_full());
    AnalyzeReport {
        order: a.order(),
        additive: summary(a.additive()),
        multiplicative: summary(a.multiplicative()),
        trivial: a.is_trivial(),
        left_brace: a.is_left_brace(),
        left_ideals: left_ideals(a).iter().map(|s| classify_subset(a, s)).collect(),
        ker_lambda: ker_lambda(a),
        socle: socle(a),
        fix: fix(a),
        right_series: right_series(a),
        right_nilpotency_class: right_nilpotency_class(a),
        meta_trivial: is_meta_trivial(a),
        simple: is_simple(a),
        characteristic_ideals: chars,
        characteristically_simple,
        power_of_simple: decompose_as_power_of_simple(a)
            .map(|(s, k)| PowerDecomposition { simple_order: s.order(), exponent: k }),
    }
}
