use crate::subset::Subset;

use super::{is_trivial_subbrace, star_product, SkewBrace};

/// `A^(1) = A`, `A^(k) = A^(k−1) ∗ A`, stopping at the first repeated term.
pub fn right_series(a: &SkewBrace) -> Vec<Subset> {
    let full = Subset::full(a.order());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().expect("non-empty");
        if last.is_zero() {
            return series;
        }
        let next = star_product(a, last, &full);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

/// First `m` with `A^(m) = 0`; `None` when the series stalls above zero.
pub fn right_nilpotency_class(a: &SkewBrace) -> Option<usize> {
    let series = right_series(a);
    series.last().filter(|s| s.is_zero()).map(|_| series.len())
}

/// `A^(2)` is a trivial sub-brace.
pub fn is_meta_trivial(a: &SkewBrace) -> bool {
    let full = Subset::full(a.order());
    is_trivial_subbrace(a, &star_product(a, &full, &full))
}
