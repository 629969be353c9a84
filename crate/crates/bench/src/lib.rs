//! Shared inputs for the benchmarks.

use coringlab::bimod::Bimodule;
use coringlab::corpus::random::random_module_pair;
use coringlab::exactla::FieldSpec;

/// Seeded module pairs over F2, F3 and Q, cycling through the fields.
pub fn module_pairs(n: u64) -> Vec<(Bimodule, Bimodule)> {
    let fields = [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals];
    (0..n).map(|seed| random_module_pair(fields[(seed % 3) as usize], seed)).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn pairs_are_deterministic() {
        let a = super::module_pairs(6);
        let b = super::module_pairs(6);
        assert!(a.iter().zip(&b).all(|(x, y)| x.0 == y.0 && x.1 == y.1));
    }
}
