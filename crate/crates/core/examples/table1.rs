//! The table of maximal d-face counts for complexes in R^r, as Markdown.

use simplexbound::commands::{cmd_table1, Options};
use simplexbound::report::Format;

fn main() -> simplexbound::Result<()> {
    let opts = Options {
        format: Format::Md,
        ..Options::default()
    };
    print!("{}", cmd_table1(&[8, 12], &opts)?.output);
    Ok(())
}
