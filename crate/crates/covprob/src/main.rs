// Guards are written `!(x > 0.0)` on purpose: they must trip for NaN too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod cli;

fn main() {
    cli::main();
}
