//! Overlap check: every way of starting to rewrite a word must reach the
//! same normal form.

use super::element::Element;
use super::generator::Letter;
use super::rules::RuleTable;
use super::AlgebraError;

/// A word whose normal form depends on the first rewrite step.
#[derive(Debug, Clone)]
pub struct ConfluenceViolation {
    pub word: Vec<Letter>,
    /// Index of the adjacent pair rewritten first.
    pub position: usize,
    pub expected: Element,
    pub found: Element,
}

#[derive(Debug, Clone, Default)]
pub struct ConfluenceReport {
    pub words_checked: usize,
    pub violations: Vec<ConfluenceViolation>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks all words of length `2..=max_len` over the ten letters.
pub fn check_confluence(table: &RuleTable, max_len: usize) -> Result<ConfluenceReport, AlgebraError> {
    let letters = Letter::all();
    let mut report = ConfluenceReport::default();
    for len in 2..=max_len {
        let mut idx = vec![0usize; len];
        loop {
            let word: Vec<Letter> = idx.iter().map(|&i| letters[i]).collect();
            check_word(table, &word, &mut report)?;
            if !advance(&mut idx, letters.len()) {
                break;
            }
        }
    }
    Ok(report)
}

fn advance(idx: &mut [usize], base: usize) -> bool {
    for d in idx.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn check_word(
    table: &RuleTable,
    word: &[Letter],
    report: &mut ConfluenceReport,
) -> Result<(), AlgebraError> {
    report.words_checked += 1;
    let expected = table.normalize_word(word)?;
    for i in 0..word.len() - 1 {
        let Some(step) = table.rewrite_at(word, i)? else {
            continue;
        };
        let mut found = Element::zero(table.nvars());
        for (c, w) in step {
            found.add_scaled(&table.normalize_word(&w)?, &c);
        }
        if found != expected {
            report.violations.push(ConfluenceViolation {
                word: word.to_vec(),
                position: i,
                expected: expected.clone(),
                found,
            });
        }
    }
    Ok(())
}
