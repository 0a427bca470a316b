#include "sset/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sset {

std::string Diagnostic::str() const
{
    if (ok()) return "ok";
    const char* k = kind == Kind::syntax ? "syntax"
                    : kind == Kind::dangling_reference ? "dangling-reference"
                    : kind == Kind::identity_violation ? "identity-violation"
                                                       : "io";
    std::ostringstream os;
    os << k << " at " << line << ":" << column << ": " << message;
    return os.str();
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

Diagnostic fail(Diagnostic::Kind kind, int line, int col, std::string msg)
{
    return {kind, line, col, std::move(msg)};
}

bool parse_int(const std::string& tok, int& out)
{
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(tok);
    return true;
}

// parse trailing word tokens "s3 s1" followed by a base identifier
bool parse_word_and_base(const std::vector<std::string>& toks, std::size_t from, Word& word,
                         std::string& base)
{
    if (from >= toks.size()) return false;
    for (std::size_t t = from; t + 1 < toks.size(); ++t) {
        const std::string& tok = toks[t];
        int idx;
        if (tok.size() < 2 || tok[0] != 's' || !parse_int(tok.substr(1), idx)) return false;
        word.idx.push_back(idx);
    }
    base = toks.back();
    return true;
}

}  // namespace

Parsed<Presentation> parse_sset(const std::string& text)
{
    Parsed<Presentation> out;
    std::vector<Line> lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "sset" || lines[0].tokens.size() != 2) {
        out.diag = fail(Diagnostic::Kind::syntax, lines.empty() ? 1 : lines[0].number, 1,
                        "expected header 'sset <name>'");
        return out;
    }
    std::map<std::string, std::pair<int, int>> declared;  // name -> (degree, line)
    struct FaceLine {
        int line;
        std::string of;
        int i;
        Word word;
        std::string base;
    };
    std::vector<FaceLine> faces;
    for (std::size_t t = 1; t < lines.size(); ++t) {
        const Line& ln = lines[t];
        const std::string& head = ln.tokens[0];
        if (head == "simplex") {
            int degree;
            if (ln.tokens.size() != 3 || !parse_int(ln.tokens[2], degree)) {
                out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                                "expected 'simplex <id> <degree>'");
                return out;
            }
            if (declared.count(ln.tokens[1])) {
                out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                                "duplicate simplex '" + ln.tokens[1] + "'");
                return out;
            }
            declared[ln.tokens[1]] = {degree, ln.number};
        } else if (head == "face") {
            int i;
            Word word;
            std::string base;
            if (ln.tokens.size() < 5 || !parse_int(ln.tokens[2], i) || ln.tokens[3] != "=" ||
                !parse_word_and_base(ln.tokens, 4, word, base)) {
                out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                                "expected 'face <id> <i> = [s<j> ]* <baseid>'");
                return out;
            }
            faces.push_back({ln.number, ln.tokens[1], i, std::move(word), std::move(base)});
        } else {
            out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                            "unknown directive '" + head + "'");
            return out;
        }
    }
    // reference and range checks with line positions
    for (const FaceLine& f : faces) {
        auto of = declared.find(f.of);
        if (of == declared.end()) {
            out.diag = fail(Diagnostic::Kind::dangling_reference, f.line, 1,
                            "face of undeclared simplex '" + f.of + "'");
            return out;
        }
        auto base = declared.find(f.base);
        if (base == declared.end()) {
            out.diag = fail(Diagnostic::Kind::dangling_reference, f.line, 1,
                            "face target '" + f.base + "' is not declared");
            return out;
        }
        if (f.i < 0 || f.i > of->second.first) {
            out.diag = fail(Diagnostic::Kind::syntax, f.line, 1,
                            "face index " + std::to_string(f.i) + " out of range for degree " +
                                std::to_string(of->second.first));
            return out;
        }
        if (!word_valid(f.word, base->second.first)) {
            out.diag = fail(Diagnostic::Kind::syntax, f.line, 1,
                            "degeneracy word is not in decreasing normal form");
            return out;
        }
        if (base->second.first + f.word.size() != of->second.first - 1) {
            out.diag = fail(Diagnostic::Kind::syntax, f.line, 1,
                            "face degree mismatch: expected " +
                                std::to_string(of->second.first - 1));
            return out;
        }
    }
    Builder b(lines[0].tokens[1]);
    try {
        for (auto& [name, dl] : declared) b.add_generator(name, dl.first);
        for (const FaceLine& f : faces) b.set_face(f.of, f.i, f.word, f.base);
        Presentation p = std::move(b).build();
        ValidationReport rep = validate(p, p.dim() + 1);
        if (!rep.ok()) {
            out.diag = fail(Diagnostic::Kind::identity_violation, 0, 0,
                            rep.issues[0].where + ": " + rep.issues[0].what);
            return out;
        }
        out.value = std::move(p);
    } catch (const error& e) {
        out.diag = fail(Diagnostic::Kind::syntax, 0, 0, e.what());
    }
    return out;
}

Parsed<SimplicialMap> parse_smap(const std::string& text, const Environment& env)
{
    Parsed<SimplicialMap> out;
    std::vector<Line> lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "smap" || lines[0].tokens.size() != 6 ||
        lines[0].tokens[2] != ":" || lines[0].tokens[4] != "->") {
        out.diag = fail(Diagnostic::Kind::syntax, lines.empty() ? 1 : lines[0].number, 1,
                        "expected header 'smap <name> : <X> -> <Y>'");
        return out;
    }
    auto src = env.ssets.find(lines[0].tokens[3]);
    auto tgt = env.ssets.find(lines[0].tokens[5]);
    if (src == env.ssets.end() || tgt == env.ssets.end()) {
        out.diag = fail(Diagnostic::Kind::dangling_reference, lines[0].number, 1,
                        "unknown object '" +
                            (src == env.ssets.end() ? lines[0].tokens[3] : lines[0].tokens[5]) +
                            "'");
        return out;
    }
    const Presentation& X = src->second;
    const Presentation& Y = tgt->second;
    std::vector<NormalSimplex> images(static_cast<std::size_t>(X.gen_count()), NormalSimplex{});
    std::vector<char> have(static_cast<std::size_t>(X.gen_count()), 0);
    for (std::size_t t = 1; t < lines.size(); ++t) {
        const Line& ln = lines[t];
        Word word;
        std::string base;
        if (ln.tokens[0] != "send" || ln.tokens.size() < 4 || ln.tokens[2] != "=" ||
            !parse_word_and_base(ln.tokens, 3, word, base)) {
            out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                            "expected 'send <id> = [s<j> ]* <id>'");
            return out;
        }
        GenId g = X.find(ln.tokens[1]);
        if (g < 0) {
            out.diag = fail(Diagnostic::Kind::dangling_reference, ln.number, 1,
                            "unknown source simplex '" + ln.tokens[1] + "'");
            return out;
        }
        GenId tb = Y.find(base);
        if (tb < 0) {
            out.diag = fail(Diagnostic::Kind::dangling_reference, ln.number, 1,
                            "unknown target simplex '" + base + "'");
            return out;
        }
        if (!word_valid(word, Y.gen(tb).degree) ||
            Y.gen(tb).degree + word.size() != X.gen(g).degree) {
            out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                            "image degree mismatch for '" + ln.tokens[1] + "'");
            return out;
        }
        images[static_cast<std::size_t>(g)] = {std::move(word), tb};
        have[static_cast<std::size_t>(g)] = 1;
    }
    for (GenId g = 0; g < X.gen_count(); ++g) {
        if (!have[static_cast<std::size_t>(g)]) {
            out.diag = fail(Diagnostic::Kind::syntax, 0, 0,
                            "no image for generator '" + X.gen(g).name + "'");
            return out;
        }
    }
    SimplicialMap f(lines[0].tokens[1], X, Y, std::move(images));
    ValidationReport rep = validate_map(f, 2);
    if (!rep.ok()) {
        out.diag = fail(Diagnostic::Kind::identity_violation, 0, 0,
                        rep.issues[0].where + ": " + rep.issues[0].what);
        return out;
    }
    out.value = std::move(f);
    return out;
}

Parsed<AnodyneTrace> parse_trace(const std::string& text, const Environment& env)
{
    Parsed<AnodyneTrace> out;
    std::vector<Line> lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "trace" || lines[0].tokens.size() != 2) {
        out.diag = fail(Diagnostic::Kind::syntax, lines.empty() ? 1 : lines[0].number, 1,
                        "expected header 'trace <name>'");
        return out;
    }
    AnodyneTrace tr;
    tr.name = lines[0].tokens[1];
    TraceStage stage;
    bool have_start = false;
    for (std::size_t t = 1; t < lines.size(); ++t) {
        const Line& ln = lines[t];
        if (ln.tokens[0] == "compose") {
            tr.stages.push_back(std::move(stage));
            stage = TraceStage{};
            continue;
        }
        int p, k;
        if (ln.tokens.size() != 7 || ln.tokens[0] != "stage" || ln.tokens[1] != "attach" ||
            ln.tokens[2] != "horn" || !parse_int(ln.tokens[3], p) ||
            !parse_int(ln.tokens[4], k) || ln.tokens[5] != "via") {
            out.diag = fail(Diagnostic::Kind::syntax, ln.number, 1,
                            "expected 'stage attach horn <p> <k> via <smap>'");
            return out;
        }
        auto att = env.smaps.find(ln.tokens[6]);
        if (att == env.smaps.end()) {
            out.diag = fail(Diagnostic::Kind::dangling_reference, ln.number, 1,
                            "unknown attaching map '" + ln.tokens[6] + "'");
            return out;
        }
        if (!have_start) {
            tr.start = att->second.target();
            have_start = true;
        }
        stage.cells.push_back({p, k, att->second});
    }
    if (!stage.cells.empty()) tr.stages.push_back(std::move(stage));
    if (!have_start) {
        out.diag = fail(Diagnostic::Kind::syntax, 0, 0, "trace has no attachments");
        return out;
    }
    out.value = std::move(tr);
    return out;
}

std::string serialize_sset(const Presentation& X)
{
    std::ostringstream os;
    os << "sset " << X.name() << "\n";
    for (GenId g = 0; g < X.gen_count(); ++g)
        os << "simplex " << X.gen(g).name << " " << X.gen(g).degree << "\n";
    for (GenId g = 0; g < X.gen_count(); ++g) {
        const Generator& gen = X.gen(g);
        for (int i = 0; i <= gen.degree && gen.degree >= 1; ++i) {
            const NormalSimplex& f = gen.faces[static_cast<std::size_t>(i)];
            os << "face " << gen.name << " " << i << " =";
            for (int j : f.word.idx) os << " s" << j;
            os << " " << X.gen(f.base).name << "\n";
        }
    }
    return os.str();
}

std::string serialize_smap(const SimplicialMap& f)
{
    std::ostringstream os;
    os << "smap " << f.name() << " : " << f.source().name() << " -> " << f.target().name()
       << "\n";
    for (GenId g = 0; g < f.source().gen_count(); ++g) {
        const NormalSimplex& img = f.image_of(g);
        os << "send " << f.source().gen(g).name << " =";
        for (int j : img.word.idx) os << " s" << j;
        os << " " << f.target().gen(img.base).name << "\n";
    }
    return os.str();
}

std::string serialize_trace(const AnodyneTrace& tr)
{
    std::ostringstream os;
    os << "trace " << tr.name << "\n";
    for (const TraceStage& stage : tr.stages) {
        for (const HornCell& cell : stage.cells)
            os << "stage attach horn " << cell.p << " " << cell.k << " via "
               << cell.attach.name() << "\n";
        os << "compose\n";
    }
    return os.str();
}

Diagnostic load_directory(const std::string& dir, Environment& env)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        return {Diagnostic::Kind::io, 0, 0, "not a directory: " + dir};
    std::vector<std::string> ssets, smaps;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string path = entry.path().string();
        if (entry.path().extension() == ".sset") ssets.push_back(path);
        if (entry.path().extension() == ".smap") smaps.push_back(path);
    }
    std::sort(ssets.begin(), ssets.end());
    std::sort(smaps.begin(), smaps.end());
    for (const std::string& path : ssets) {
        auto bytes = read_file(path);
        if (!bytes.ok()) return bytes.diag;
        Parsed<Presentation> p = parse_sset(*bytes.value);
        if (!p.ok()) {
            p.diag.message = path + ": " + p.diag.message;
            return p.diag;
        }
        env.ssets[p.value->name()] = std::move(*p.value);
    }
    for (const std::string& path : smaps) {
        auto bytes = read_file(path);
        if (!bytes.ok()) return bytes.diag;
        Parsed<SimplicialMap> m = parse_smap(*bytes.value, env);
        if (!m.ok()) {
            m.diag.message = path + ": " + m.diag.message;
            return m.diag;
        }
        env.smaps[m.value->name()] = std::move(*m.value);
    }
    return {};
}

Diagnostic write_file(const std::string& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) return {Diagnostic::Kind::io, 0, 0, "cannot open for writing: " + path};
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return {};
}

Diagnostic write_correction_trace(const std::string& dir, const CorrectionTrace& tr)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return {Diagnostic::Kind::io, 0, 0, "cannot create " + dir};
    auto dump = [&](const SimplicialMap& m, const char* nm) {
        SimplicialMap copy = m;
        copy.rename(nm);
        return write_file(dir + "/" + nm + ".smap", serialize_smap(copy));
    };
    if (tr.status == MinimalizeStatus::ok) {
        dump(tr.l0, "l0");
        dump(tr.m0, "m0");
        dump(tr.a, "a");
        dump(tr.btilde, "btilde");
        dump(tr.b, "b");
        dump(tr.gamma, "gamma");
        dump(tr.delta, "delta");
        dump(tr.m, "m");
        dump(tr.h, "h");
        dump(tr.lift, "lift");
    }
    std::string manifest = std::string("{\n  \"status\": \"") +
                           (tr.status == MinimalizeStatus::ok ? "ok" : "insufficient-fillers") +
                           "\",\n  \"failed_step\": \"" + tr.failed_step + "\"\n}\n";
    return write_file(dir + "/manifest.json", manifest);
}

Parsed<std::string> read_file(const std::string& path)
{
    Parsed<std::string> out;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        out.diag = {Diagnostic::Kind::io, 0, 0, "cannot open: " + path};
        return out;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out.value = ss.str();
    return out;
}

}  // namespace sset
