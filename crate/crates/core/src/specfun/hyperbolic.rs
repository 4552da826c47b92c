/// `ln(cosh x)` without overflow for large `|x|`.
pub fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

pub fn sech(x: f64) -> f64 {
    let a = x.abs();
    if a > 700.0 {
        return 0.0;
    }
    1.0 / a.cosh()
}
