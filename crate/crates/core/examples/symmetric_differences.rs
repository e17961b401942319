//! Differences of Gaussian coefficients and what is known about their shape.

use semiinv::differences::{bergeron, f_difference, g_difference, stanley_zanello, strange};
use semiinv::qpoly::QPoly;

fn describe(name: &str, p: &QPoly) {
    let unimodal = match p.unimodality_violation() {
        Ok(None) => "unimodal".to_string(),
        Ok(Some(i)) => format!("not unimodal (rise at {i})"),
        Err(e) => e.to_string(),
    };
    let strict = match p.strictness_violation() {
        Ok(None) => "strict except the ends".to_string(),
        Ok(Some(i)) => format!("not strict (at {i})"),
        Err(e) => e.to_string(),
    };
    println!(
        "{name}: degree {:?}, symmetric {}, {unimodal}, {strict}",
        p.degree(),
        p.is_symmetric()
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    describe("F(6, 4)", &f_difference(6, 4)?);
    describe("F(5, 9)", &f_difference(5, 9)?);
    describe("F(14, 5)", &f_difference(14, 5)?);
    describe("F(8, 15)", &f_difference(8, 15)?);

    let g = g_difference(8, 14, 10)?;
    describe("G(8, 14, 10)", &g);
    let middle: Vec<String> = (53..=59).map(|i| g.coeff(i).to_string()).collect();
    println!("  coefficients 53..59: {}", middle.join(", "));

    describe("strange(11, 3, 1)", &strange(11, 3, 1)?);
    describe("stanley_zanello(5, 12, 8)", &stanley_zanello(5, 12, 8)?);
    describe("bergeron(2, 4, 3, 6)", &bergeron(2, 4, 3, 6)?);
    println!(
        "stanley_zanello(4, 10, 8) == F(6, 4): {}",
        stanley_zanello(4, 10, 8)? == f_difference(6, 4)?
    );
    Ok(())
}
