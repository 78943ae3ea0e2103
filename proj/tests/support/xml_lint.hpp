#ifndef LHM_TESTS_XML_LINT_HPP
#define LHM_TESTS_XML_LINT_HPP

#include <cctype>
#include <string>
#include <vector>

namespace lhm_test {

/// Minimal well-formedness check for the SVG output: balanced tags, quoted
/// attributes, no stray '<'/'&' in text. Not a general XML parser.
inline bool xml_well_formed(const std::string& s, std::string* why = nullptr)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const char c = s[i];
        if (c == '<') {
            if (i + 1 >= n)
                return fail("dangling '<'");
            if (s.compare(i, 2, "<?") == 0) {  // declaration
                const auto end = s.find("?>", i);
                if (end == std::string::npos)
                    return fail("unterminated declaration");
                i = end + 2;
                continue;
            }
            if (s.compare(i, 4, "<!--") == 0) {
                const auto end = s.find("-->", i);
                if (end == std::string::npos)
                    return fail("unterminated comment");
                i = end + 3;
                continue;
            }
            const bool closing = s[i + 1] == '/';
            std::size_t j = i + (closing ? 2 : 1);
            std::string name;
            while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                             s[j] == ':' || s[j] == '-' || s[j] == '_'))
                name += s[j++];
            if (name.empty())
                return fail("empty tag name");
            // attributes
            bool self_closing = false;
            while (j < n && s[j] != '>') {
                if (s[j] == '"') {
                    const auto end = s.find('"', j + 1);
                    if (end == std::string::npos)
                        return fail("unterminated attribute value");
                    j = end + 1;
                    continue;
                }
                if (s[j] == '/' && j + 1 < n && s[j + 1] == '>') {
                    self_closing = true;
                    ++j;
                    continue;
                }
                if (s[j] == '<')
                    return fail("'<' inside tag");
                ++j;
            }
            if (j >= n)
                return fail("unterminated tag " + name);
            if (closing) {
                if (self_closing)
                    return fail("closing tag cannot self-close");
                if (stack.empty() || stack.back() != name)
                    return fail("mismatched closing tag " + name);
                stack.pop_back();
            } else if (!self_closing) {
                stack.push_back(name);
            }
            i = j + 1;
        } else if (c == '>') {
            return fail("stray '>'");
        } else if (c == '&') {
            static const char* entities[] = {"&amp;", "&lt;", "&gt;", "&quot;",
                                             "&apos;"};
            bool ok = false;
            for (const char* e : entities)
                if (s.compare(i, std::string(e).size(), e) == 0) {
                    ok = true;
                    i += std::string(e).size();
                    break;
                }
            if (!ok)
                return fail("bare '&' in text");
        } else {
            ++i;
        }
    }
    if (!stack.empty())
        return fail("unclosed tag " + stack.back());
    return true;
}

}  // namespace lhm_test

#endif
