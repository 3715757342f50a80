use crate::brace::{is_characteristically_simple, is_meta_trivial, is_simple, right_nilpotency_class, SkewBrace};
use crate::factorization::{find_factorizations, FactorizationQuery};
use crate::group::identify_group;

use super::{BraceCatalog, EnumerationError};

/// One `key=value` filter. Group names are those of the group catalog
/// (`C2^3`, `D8`, `Q8`, `S3`, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Additive(String),
    Multiplicative(String),
    Trivial(bool),
    LeftBrace(bool),
    Simple(bool),
    CharacteristicallySimple(bool),
    RightNilpotent(bool),
    RightClass(usize),
    MetaTrivial(bool),
    TrivialTrivialFactorization(bool),
}

impl Predicate {
    /// Parses a comma-separated list such as `add=C2^3,mult=D8,right_nilpotent=false`.
    pub fn parse_list(s: &str) -> Result<Vec<Predicate>, EnumerationError> {
        s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(Predicate::parse).collect()
    }

    pub fn parse(s: &str) -> Result<Predicate, EnumerationError> {
        let Some((key, value)) = s.split_once('=') else {
            return Err(EnumerationError::UnknownPredicate(s.to_string()));
        };
        let (key, value) = (key.trim(), value.trim());
        let bad = || EnumerationError::BadPredicateValue { key: key.to_string(), value: value.to_string() };
        let flag = || value.parse::<bool>().map_err(|_| bad());
        Ok(match key {
            "add" => Predicate::Additive(value.to_string()),
            "mult" => Predicate::Multiplicative(value.to_string()),
            "trivial" => Predicate::Trivial(flag()?),
            "left_brace" => Predicate::LeftBrace(flag()?),
            "simple" => Predicate::Simple(flag()?),
            "char_simple" => Predicate::CharacteristicallySimple(flag()?),
            "right_nilpotent" => Predicate::RightNilpotent(flag()?),
            "right_class" => Predicate::RightClass(value.parse().map_err(|_| bad())?),
            "meta_trivial" => Predicate::MetaTrivial(flag()?),
            "trivial_trivial" => Predicate::TrivialTrivialFactorization(flag()?),
            _ => return Err(EnumerationError::UnknownPredicate(key.to_string())),
        })
    }

    pub fn matches(&self, a: &SkewBrace) -> bool {
        match self {
            Predicate::Additive(name) => identify_group(a.additive()).as_deref() == Some(name),
            Predicate::Multiplicative(name) => identify_group(a.multiplicative()).as_deref() == Some(name),
            Predicate::Trivial(v) => a.is_trivial() == *v,
            Predicate::LeftBrace(v) => a.is_left_brace() == *v,
            Predicate::Simple(v) => is_simple(a) == *v,
            Predicate::CharacteristicallySimple(v) => is_characteristically_simple(a) == *v,
            Predicate::RightNilpotent(v) => right_nilpotency_class(a).is_some() == *v,
            Predicate::RightClass(m) => right_nilpotency_class(a) == Some(*m),
            Predicate::MetaTrivial(v) => is_meta_trivial(a) == *v,
            Predicate::TrivialTrivialFactorization(v) => {
                !find_factorizations(a, &FactorizationQuery::trivial_trivial()).is_empty() == *v
            }
        }
    }
}

/// Entries satisfying every predicate in `description`.
pub fn catalog_query<'a>(cat: &'a BraceCatalog, description: &str) -> Result<Vec<&'a SkewBrace>, EnumerationError> {
    let preds = Predicate::parse_list(description)?;
    Ok(cat.entries.iter().filter(|a| preds.iter().all(|p| p.matches(a))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::braces_of_order_with_cap;

    #[test]
    fn parsing() {
        assert_eq!(
            Predicate::parse_list("add=C2^3, right_nilpotent=false").unwrap(),
            vec![Predicate::Additive("C2^3".into()), Predicate::RightNilpotent(false)]
        );
        assert_eq!(Predicate::parse_list("").unwrap(), vec![]);
        assert!(matches!(Predicate::parse("colour=red"), Err(EnumerationError::UnknownPredicate(_))));
        assert!(matches!(Predicate::parse("simple"), Err(EnumerationError::UnknownPredicate(_))));
        assert!(matches!(Predicate::parse("simple=maybe"), Err(EnumerationError::BadPredicateValue { .. })));
    }

    #[test]
    fn prime_order_catalog_is_the_trivial_brace() {
        for p in [2, 3, 5] {
            let cat = braces_of_order_with_cap(p, 8).unwrap();
            let all = catalog_query(&cat, "").unwrap();
            assert_eq!(all.len(), 1);
            assert_eq!(catalog_query(&cat, "trivial=true").unwrap().len(), 1);
        }
        let one = braces_of_order_with_cap(1, 8).unwrap();
        assert_eq!(catalog_query(&one, "add=C1,right_class=1").unwrap().len(), 1);
    }
}
