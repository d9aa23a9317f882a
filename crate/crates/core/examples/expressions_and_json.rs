//! Reading supernumbers from text and writing them in both JSON modes.

use superspace::expr::{parse_ast, parse_expr};
use superspace::json::{algebra_for_q, to_canonical_string, Codec, Mode};

fn main() -> superspace::Result<()> {
    let alg = algebra_for_q(8)?;
    let text = "(1/2 + 3i)*x1*bx1 - x2*x1 + 7";
    println!("ast: {}", parse_ast(text)?);
    let z = parse_expr(text, &alg)?;
    println!("value: {z}");

    for mode in [Mode::Expr, Mode::Json] {
        let codec = Codec::new(mode, alg.clone());
        println!("{mode:?}:\n{}", to_canonical_string(&codec.encode_number(&z)));
    }

    match parse_expr("1 + * x1", &alg) {
        Err(e) => println!("error: {e}"),
        Ok(v) => println!("unexpected {v}"),
    }
    Ok(())
}
