#include <prs/errors.hpp>
#include <prs/named_graph.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace prs
{
    namespace
    {
        class NameParser
        {
        public:
            explicit NameParser(std::string_view text) :
                _text(text)
            {
            }

            auto parse() -> Graph
            {
                Graph g = term();
                while (_pos < _text.size()) {
                    expect('u');
                    g = disjoint_union(g, term());
                }
                return g;
            }

        private:
            auto term() -> Graph
            {
                int copies = 1;
                if (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
                    copies = number();
                if (copies < 1)
                    fail("multiplicity must be positive");
                if (_pos >= _text.size())
                    fail("expected K, C, P or E");
                char kind = _text[_pos++];
                Graph one;
                switch (kind) {
                case 'K': {
                    int a = number();
                    if (_pos < _text.size() && _text[_pos] == ',') {
                        ++_pos;
                        one = complete_bipartite_graph(a, number());
                    }
                    else
                        one = complete_graph(a);
                    break;
                }
                case 'C': {
                    std::size_t at = _pos;
                    int n = number();
                    if (n < 3)
                        throw FormatError("a cycle needs at least 3 vertices", at);
                    one = cycle_graph(n);
                    break;
                }
                case 'P': one = path_graph(number()); break;
                case 'E': one = empty_graph(number()); break;
                default: --_pos; fail("expected K, C, P or E");
                }
                Graph g = one;
                for (int i = 1; i < copies; ++i)
                    g = disjoint_union(g, one);
                return g;
            }

            auto number() -> int
            {
                std::size_t start = _pos;
                long value = 0;
                while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                    value = value * 10 + (_text[_pos++] - '0');
                    if (value > max_vertices)
                        throw FormatError("number too large", start);
                }
                if (_pos == start)
                    fail("expected a number");
                return static_cast<int>(value);
            }

            void expect(char c)
            {
                if (_pos >= _text.size() || _text[_pos] != c)
                    fail(std::string("expected '") + c + "'");
                ++_pos;
            }

            [[noreturn]] void fail(const std::string & message)
            {
                throw FormatError("bad graph name '" + std::string(_text) + "': " + message, _pos);
            }

            std::string_view _text;
            std::size_t _pos = 0;
        };

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }
    }

    auto parse_named_graph(std::string_view text) -> Graph
    {
        return NameParser(text).parse();
    }

    auto parse_graph_argument(std::string_view text) -> Graph
    {
        text = trim(text);
        if (text.empty())
            throw FormatError("empty graph argument", 0);

        if (text.front() == '@') {
            std::string path(text.substr(1));
            std::ifstream in(path);
            if (! in)
                throw PreconditionError("cannot read graph file '" + path + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            std::string content = buffer.str();
            // edge lists start with "n m"; graph6 has no spaces
            std::string_view body = trim(content);
            auto first_line = body.substr(0, body.find('\n'));
            bool comment = ! body.empty() && body.front() == '#';
            if (comment || first_line.find(' ') != std::string_view::npos)
                return parse_edge_list(content);
            return from_graph6(trim(first_line));
        }

        if (! text.starts_with(">>graph6<<")
            && std::any_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return parse_named_graph(text);
        return from_graph6(text);
    }
}
