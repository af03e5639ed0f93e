//! Graded inclusion between linguistic variables, attributes and classes.
//!
//! User variables are compared through their per-level centroids. Within a
//! procedure the per-level minima are averaged over the included variable's
//! levels, so a level missing from the including side contributes 0.

use super::attribute::{Attribute, FuzzyClass, Instance, NamedAttribute};
use super::vars::{SystemLinguisticVariable, UserLinguisticVariable};
use crate::error::{Error, Result};

/// `sum_p min(a_p, b_p) / sum_p a_p`, aligned by procedure id.
pub fn incl_system_vars(a: &SystemLinguisticVariable, b: &SystemLinguisticVariable) -> Result<f64> {
    let total: f64 = a.iter().map(|(_, d)| d).sum();
    if total <= 0.0 {
        return Err(Error::degenerate("included system variable has no support"));
    }
    let shared: f64 = a.iter().map(|(p, d)| d.min(b.degree(p.as_str()))).sum();
    Ok(shared / total)
}

/// Inclusion of user variable `t` in `s`, computed on centroids.
pub fn incl_user_vars(t: &UserLinguisticVariable, s: &UserLinguisticVariable) -> Result<f64> {
    if t.is_empty() {
        return Err(Error::degenerate("included user variable is empty"));
    }
    let s_centroids = s.centroids();
    let mut num = 0.0;
    let mut den = 0.0;
    for (p, levels) in t.centroids() {
        let n = levels.len() as f64;
        den += levels.values().sum::<f64>() / n;
        if let Some(other) = s_centroids.get(&p) {
            let shared: f64 = levels
                .iter()
                .filter_map(|(l, ct)| other.get(l).map(|cs| ct.min(*cs)))
                .sum();
            num += shared / n;
        }
    }
    if den <= 0.0 {
        return Err(Error::degenerate("included user variable has zero centroids"));
    }
    Ok(num / den)
}

fn mean(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values {
        sum += v?;
        count += 1;
    }
    if count == 0 {
        return Err(Error::degenerate("nothing to average"));
    }
    Ok(sum / count as f64)
}

/// Mean inclusion over positionally paired linguistic variables.
pub fn incl_attributes(a: &Attribute, b: &Attribute) -> Result<f64> {
    match (a, b) {
        (Attribute::System(x), Attribute::System(y)) => {
            check_len(x.0.len(), y.0.len())?;
            mean(x.0.values().zip(y.0.values()).map(|(t, s)| incl_system_vars(t, s)))
        }
        (Attribute::User(x), Attribute::User(y)) => {
            check_len(x.0.len(), y.0.len())?;
            mean(x.0.values().zip(y.0.values()).map(|(t, s)| incl_user_vars(t, s)))
        }
        _ => Err(Error::AttributeKindMismatch),
    }
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

fn mean_attribute_inclusion(lhs: &[NamedAttribute], rhs: &[NamedAttribute]) -> Result<f64> {
    check_len(lhs.len(), rhs.len())?;
    mean(
        lhs.iter()
            .zip(rhs)
            .map(|(x, y)| incl_attributes(&x.value, &y.value)),
    )
}

/// Degree to which `c1` is a kind of `c2`.
pub fn incl_classes(c1: &FuzzyClass, c2: &FuzzyClass) -> Result<f64> {
    mean_attribute_inclusion(&c1.attributes, &c2.attributes)
}

/// Degree to which `instance` is a member of `class`.
pub fn membership_instance(instance: &Instance, class: &FuzzyClass) -> Result<f64> {
    mean_attribute_inclusion(&instance.attributes, &class.attributes)
}
