//! Tab-separated lexicons: `source<TAB>category<TAB>target`, one entry per
//! line. Lines starting with `#` and blank lines are skipped.

use std::collections::HashMap;

use super::FormatError;
use crate::model::Category;
use crate::translate::Lexicon;

pub fn parse_lexicon(text: &str, name: &str) -> Result<Lexicon, FormatError> {
    let mut lexicon = Lexicon::new(name);
    let mut first_seen: HashMap<(String, Category), usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        let [source, tag, target] = fields[..] else {
            return Err(FormatError::LexiconLine {
                line,
                message: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        };
        for (what, value) in [("source", source), ("target", target)] {
            if value.is_empty() || value.contains(char::is_whitespace) {
                return Err(FormatError::LexiconLine {
                    line,
                    message: format!("{what} `{value}` must be one non-empty word"),
                });
            }
        }
        let category = tag.parse::<Category>().map_err(|bad| FormatError::LexiconLine {
            line,
            message: format!("unknown category `{bad}`"),
        })?;
        let key = (source.to_string(), category);
        if let Some(&first_line) = first_seen.get(&key) {
            return Err(FormatError::DuplicateLexeme {
                line,
                first_line,
                surface: source.to_string(),
                category: category.tag().to_string(),
            });
        }
        first_seen.insert(key, line);
        lexicon.insert(source, category, target);
    }
    Ok(lexicon)
}
