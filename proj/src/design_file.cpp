#include <bdom/constructors.hpp>
#include <bdom/design_file.hpp>
#include <bdom/errors.hpp>
#include <bdom/neatness.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using std::string;
using std::string_view;
using std::vector;

namespace bdom
{
    using std::to_string;

    namespace
    {
        struct Token
        {
            long long value;
            int column;
        };

        auto tokenize(string_view line, int line_no) -> vector<Token>
        {
            vector<Token> out;
            std::size_t i = 0;
            while (i < line.size()) {
                char c = line[i];
                if (c == '#')
                    break;
                if (c == ' ' || c == '\t' || c == '\r') {
                    ++i;
                    continue;
                }
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
                    ++i;
                auto word = line.substr(start, i - start);
                long long value = 0;
                auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
                if (ec != std::errc{} || ptr != word.data() + word.size())
                    throw SyntaxError("expected an integer, found '" + string(word) + "'", line_no,
                        static_cast<int>(start) + 1);
                out.push_back({value, static_cast<int>(start) + 1});
            }
            return out;
        }

        auto parse_int_suffix(const string & text, const string & source) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw Error(ErrorKind::invalid_input, "bad number in design source '" + source + "'");
            return value;
        }
    }

    auto parse_design_file(string_view text) -> Design
    {
        int v = 0, k = 0, lambda = 0;
        bool have_header = false;
        vector<vector<int>> blocks;
        int line_no = 0;
        std::istringstream in{string(text)};
        string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            auto tokens = tokenize(raw, line_no);
            if (tokens.empty())
                continue;
            if (! have_header) {
                if (tokens.size() != 3)
                    throw SyntaxError("header must be 'v k lambda'", line_no, tokens.front().column);
                for (const auto & t : tokens)
                    if (t.value < 1 || t.value > 1'000'000)
                        throw SyntaxError("header values must be positive", line_no, t.column);
                v = static_cast<int>(tokens[0].value);
                k = static_cast<int>(tokens[1].value);
                lambda = static_cast<int>(tokens[2].value);
                have_header = true;
                continue;
            }
            vector<int> blk;
            for (const auto & t : tokens) {
                if (t.value < 1 || t.value > v)
                    throw SyntaxError("point " + std::to_string(t.value) + " outside 1.." + std::to_string(v),
                        line_no, t.column);
                blk.push_back(static_cast<int>(t.value) - 1);
            }
            blocks.push_back(std::move(blk));
        }
        if (! have_header)
            throw SyntaxError("missing 'v k lambda' header", line_no, 1);
        return validate_design(v, blocks, k, lambda);
    }

    auto emit_design_file(const Design & d, string_view title) -> string
    {
        std::ostringstream out;
        if (! title.empty())
            out << "# " << title << '\n';
        out << d.v() << ' ' << d.k() << ' ' << d.lambda() << '\n';
        for (const auto & blk : d.block_lists()) {
            for (std::size_t i = 0; i < blk.size(); ++i)
                out << (i ? " " : "") << blk[i] + 1;
            out << '\n';
        }
        return out.str();
    }

    auto read_design_file(const string & path) -> Design
    {
        std::ifstream in(path);
        if (! in)
            throw Error(ErrorKind::invalid_input, "cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_design_file(buf.str());
    }

    auto resolve_design(const string & source) -> NamedDesign
    {
        std::error_code ec;
        if (std::filesystem::is_regular_file(source, ec))
            return {source, read_design_file(source)};

        auto colon = source.find(':');
        string head = source.substr(0, colon);
        string rest = colon == string::npos ? string{} : source.substr(colon + 1);

        if (colon == string::npos) {
            if (head == "fano")
                return {source, fano()};
            if (head == "ag9")
                return {source, affine_plane_9()};
            if (head == "fixture-843")
                return {source, fixture_8_4_3()};
        }
        else {
            if (head == "pg")
                return {source, projective_plane(parse_int_suffix(rest, source))};
            if (head == "sts-bose")
                return {source, sts_bose(parse_int_suffix(rest, source))};
            if (head == "cyclic")
                return {source, cyclic_design(difference_family_preset(rest))};
            if (head == "double")
                return {source, double_design(resolve_design(rest).design)};
            if (head == "complement")
                return {source, complement(resolve_design(rest).design)};
            if (head == "dual")
                return {source, dual(resolve_design(rest).design)};
            if (head == "residual")
                return {source, residual(resolve_design(rest).design, 0)};
            if (head == "derived")
                return {source, derived(resolve_design(rest).design, 0)};
            if (head == "pasch-trade") {
                auto base = resolve_design(rest).design;
                auto configs = find_pasch(base, 1);
                if (configs.empty())
                    throw Error(ErrorKind::invalid_configuration, "'" + rest + "' has no Pasch configuration");
                return {source, pasch_trade(base, configs.front())};
            }
        }
        throw Error(ErrorKind::invalid_input, "'" + source + "' is neither a file nor a built-in design");
    }
}
