//! Monomial labels: `var(^power)?(*var(^power)?)*` with the fixed variable
//! names of each catalog metric; the empty monomial prints as `1`.

use calabi::MultiIndex;

pub fn monomial_label(monomial: &MultiIndex, labels: &[String]) -> String {
    if monomial.is_zero() {
        return "1".to_string();
    }
    monomial
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                labels[i].clone()
            } else {
                format!("{}^{}", labels[i], e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn parse_monomial_label(text: &str, labels: &[String]) -> Result<MultiIndex, String> {
    let mut exps = vec![0u32; labels.len()];
    if text == "1" {
        return Ok(MultiIndex::new(exps));
    }
    for factor in text.split('*') {
        let (var, power) = match factor.split_once('^') {
            Some((v, p)) => (
                v,
                p.parse::<u32>()
                    .map_err(|e| format!("bad power in {factor:?}: {e}"))?,
            ),
            None => (factor, 1),
        };
        let index = labels
            .iter()
            .position(|l| l == var)
            .ok_or_else(|| format!("unknown variable {var:?}"))?;
        exps[index] += power;
    }
    Ok(MultiIndex::new(exps))
}
