//! The README's library walkthrough, compiled.

use dioph::classifier::{classify_product_equation, ProductForm};
use dioph::cli::parse::parse_poly;
use dioph::search::enumerate_solutions;

fn main() -> Result<(), dioph::Error> {
    let pf = ProductForm::from_i64s(&[0, 1])?; // (y)(y+1)
    let f = parse_poly("x^2+1", "x")?;

    let verdict = classify_product_equation(&pf, &f)?;
    assert_eq!(verdict.theorem.as_deref(), Some("Thm 1.2"));
    println!("{} = {}: {}", pf, f.to_string_var("x"), verdict.tag);

    let sols = enumerate_solutions(&f, &pf.expand(), 1_000)?;
    assert_eq!(sols.len(), 4);
    println!("{} box solutions at 10^3", sols.len());
    Ok(())
}
