//-----------------------------------------------------------------------------
// Built-in .geo script corpus, embedded at configure time from scripts/*.geo
// so the binaries work from any directory. One entry per Durer figure, keyed
// by the file stem (e.g. "pentagon-rusty-16").
//-----------------------------------------------------------------------------
#pragma once

#include <string>

namespace zirkel {

struct CorpusEntry {
    const char *name;
    const char *text;
};

extern const CorpusEntry kCorpus[];
extern const int kCorpusCount;

// nullptr when no entry has that name.
const char *corpus_text(const std::string &name);

} // namespace zirkel
