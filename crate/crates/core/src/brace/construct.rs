use crate::group::{induced_table, GroupTable};
use crate::subset::Subset;

use super::{is_ideal, is_left_ideal, BraceError, SkewBrace};

/// The brace `(G, ·, ·)`.
pub fn trivial_brace(g: GroupTable) -> SkewBrace {
    SkewBrace::assemble(g.clone(), g)
}

fn restrict(g: &GroupTable, s: &Subset) -> GroupTable {
    induced_table(g, s).expect("left ideals are subgroups of both groups")
}

/// The induced brace on a left ideal; element `s[i]` becomes label `i`.
pub fn sub_brace(a: &SkewBrace, s: &Subset) -> Result<SkewBrace, BraceError> {
    if !is_left_ideal(a, s) {
        return Err(BraceError::NotLeftIdeal);
    }
    Ok(SkewBrace::assemble(restrict(a.additive(), s), restrict(a.multiplicative(), s)))
}

/// `A / I` on additive cosets, labelled by first appearance of their least element.
pub fn quotient(a: &SkewBrace, i: &Subset) -> Result<SkewBrace, BraceError> {
    if !is_ideal(a, i) {
        return Err(BraceError::NotIdeal);
    }
    let n = a.order();
    let mut label = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if label[x] == usize::MAX {
            for y in i.iter() {
                label[a.add(x, y)] = reps.len();
            }
            reps.push(x);
        }
    }
    let k = reps.len();
    let mut add = vec![0; k * k];
    let mut circ = vec![0; k * k];
    for (p, &x) in reps.iter().enumerate() {
        for (q, &y) in reps.iter().enumerate() {
            add[p * k + q] = label[a.add(x, y)];
            circ[p * k + q] = label[a.circ(x, y)];
        }
    }
    Ok(SkewBrace::assemble(
        GroupTable::from_flat_trusted(k, add),
        GroupTable::from_flat_trusted(k, circ),
    ))
}

/// Componentwise product; `(x₁, …, x_k)` is labelled in mixed radix with
/// the first factor least significant.
pub fn direct_product_braces(factors: &[SkewBrace]) -> SkewBrace {
    let mut iter = factors.iter();
    let Some(first) = iter.next() else {
        return trivial_brace(GroupTable::trivial());
    };
    iter.fold(first.clone(), |acc, b| {
        SkewBrace::assemble(
            crate::group::direct_product(acc.additive(), b.additive()),
            crate::group::direct_product(acc.multiplicative(), b.multiplicative()),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{socle, validate_brace};
    use crate::group::{cyclic, elementary_abelian};

    #[test]
    fn degenerate_sub_and_quotient() {
        let a = trivial_brace(cyclic(6));
        assert_eq!(sub_brace(&a, &Subset::zero(6)).unwrap().order(), 1);
        assert_eq!(quotient(&a, &Subset::full(6)).unwrap().order(), 1);
        let soc = socle(&a);
        assert_eq!(quotient(&a, &soc).unwrap().order(), 1);
        assert_eq!(quotient(&a, &Subset::zero(6)).unwrap(), a);
    }

    #[test]
    fn quotient_and_sub_are_valid_braces() {
        let a = trivial_brace(cyclic(6));
        let i = Subset::new(6, [0, 2, 4]).unwrap();
        let q = quotient(&a, &i).unwrap();
        assert_eq!(q.order(), 2);
        validate_brace(q.additive().clone(), q.multiplicative().clone()).unwrap();
        let s = sub_brace(&a, &i).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(sub_brace(&a, &Subset::new(6, [0, 1]).unwrap()), Err(BraceError::NotLeftIdeal));
        assert_eq!(quotient(&a, &Subset::new(6, [0, 1]).unwrap()), Err(BraceError::NotIdeal));
    }

    #[test]
    fn product_of_trivial_braces() {
        let c2 = trivial_brace(cyclic(2));
        let p = direct_product_braces(&[c2.clone(), c2]);
        assert!(p.is_trivial());
        assert_eq!(p.additive(), &elementary_abelian(2, 2));
    }
}
