//! Deterministic float formatting for CSV and OBJ output: 9 significant
//! digits, scientific notation, '.' decimal separator.

pub fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

#[cfg(test)]
mod tests {
    use super::sig9;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(1.0), "1.00000000e0");
        assert_eq!(sig9(-0.5), "-5.00000000e-1");
        assert_eq!(sig9(123456.789), "1.23456789e5");
    }
}
