#include "qsqc/corpus.hpp"

namespace qsqc {

namespace {

constexpr const char* kC8 = R"(10001011|00101101
01001110|00111010
00101101|01001110
00010111|01011001
00000000|11111111
)";

constexpr const char* kAlpha1 = "11101000|00000000\n";
constexpr const char* kAlpha2 = "01110100|00000000\n";
constexpr const char* kAlpha3 = "11010010|00000000\n";

constexpr const char* kOmega8 = "00000000|00000000\n";

constexpr const char* kOmega81 = R"(00000000|00000000
01100000|10010000
)";

constexpr const char* kOmega82 = R"(00000000|00000000
10100000|11000000
01100000|10010000
11000000|01010000
)";

constexpr const char* kOmega83 = R"(00000000|00000000
10100000|11000000
10010000|10100000
00110000|01100000
01100000|10010000
11000000|01010000
11110000|00110000
01010000|11110000
)";

constexpr const char* kC12 = R"(100001000000|010100011000
010001000000|010111001100
001001000000|010010000110
000101000000|011101100100
000011000000|001100110110
000000100010|001100111010
000000010010|010111110110
000000001010|000101010100
000000000110|010100101000
000000000001|000000000000
000000000000|111111000000
000000000000|000000111110
)";

constexpr const char* kOmega12 = R"(000000000000|000000000000
000000111110|000000000000
)";

constexpr const char* kC9 = R"(100010000|000011110
000101000|100001000
010011010|000110000
000101110|010110010
001110100|000101110
000000110|001000100
000000001|000000000
)";

constexpr const char* kOmega9 = R"(000000000|000000000
110000000|000000000
101000000|000000000
011000000|000000000
100100000|000000000
010100000|000000000
001100000|000000000
111100000|000000000
100010000|000000000
010010000|000000000
001010000|000000000
111010000|000000000
000110000|000000000
110110000|000000000
101110000|000000000
011110000|000000000
)";

constexpr const char* kC7 = R"(1011100|0000000
0000000|1111110
0100010|0000000
0000001|0000000
)";

constexpr const char* kOmega7 = R"(0000000|0000000
0000000|1100000
)";

}  // namespace

const std::vector<ExampleCase>& bundled_examples() {
    static const std::vector<ExampleCase> cases = [] {
        static const std::string c81 = std::string(kC8) + kAlpha1;
        static const std::string c82 = c81 + kAlpha2;
        static const std::string c83 = c82 + kAlpha3;
        return std::vector<ExampleCase>{
            {"c8", "c8-family", kC8, kOmega8, 3, 8, 3, 1},
            {"c81", "c8-family", c81.c_str(), kOmega81, 3, 8, 2, 2},
            {"c82", "c8-family", c82.c_str(), kOmega82, 3, 8, 1, 4},
            {"c83", "c8-family", c83.c_str(), kOmega83, 3, 8, 0, 8},
            {"c12", "c12", kC12, kOmega12, 5, 12, 0, 2},
            {"c9", "c9", kC9, kOmega9, 2, 9, 2, 16},
            {"c7", "c7", kC7, kOmega7, 2, 7, 3, 2},
        };
    }();
    return cases;
}

std::vector<ExampleCase> examples_by_name(const std::string& name) {
    std::vector<ExampleCase> out;
    for (const auto& c : bundled_examples())
        if (c.name == name || c.family == name || name == "all" || name.empty()) out.push_back(c);
    return out;
}

}  // namespace qsqc
