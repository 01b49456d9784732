//! Line-at-a-time interactive loop.

use std::io::{self, BufRead, Write};

use super::eval::{Session, FUNCTIONS};
use super::json::to_json_string;

const HELP: &str = "\
statements:  group Q,Z | name = expr | print expr | expr
             solve S1 + ? = S2 | solve I2 = I1 * ?
literals:    [1, -1/2]  seg(1, >=, [0, 0])  ideal(seg(..))  O(1)  H(1)  Ov  Mv
operators:   S + S, S + g, S - g, g - g, I * I, k * S
commands:    :help  :funcs  :quit";

/// Reads statements from `input` until end of input or `:quit`. Errors are
/// printed and the session carries on.
pub fn run_repl(input: impl BufRead, mut out: impl Write, json: bool, prompt: bool) -> io::Result<()> {
    let mut session = Session::new();
    if prompt {
        writeln!(out, "cutforge repl; :help for help")?;
    }
    let mut lines = input.lines();
    loop {
        if prompt {
            write!(out, "cut> ")?;
            out.flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        match line.trim() {
            ":quit" | ":q" => break,
            ":help" => {
                writeln!(out, "{HELP}")?;
                continue;
            }
            ":funcs" => {
                for (_, _, doc) in FUNCTIONS {
                    writeln!(out, "  {doc}")?;
                }
                continue;
            }
            _ => {}
        }
        let mut printed = Vec::new();
        let r = session.run_with(&line, &mut |v| {
            printed.push(if json { to_json_string(v) } else { v.to_string() });
        });
        for p in printed {
            writeln!(out, "{p}")?;
        }
        if let Err(e) = r {
            writeln!(out, "error: {e}")?;
        }
    }
    if prompt {
        writeln!(out)?;
    }
    Ok(())
}
