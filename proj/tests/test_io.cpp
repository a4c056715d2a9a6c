#include <gtest/gtest.h>

#include <sstream>

#include "jrpsched/io.hpp"

using namespace jrpsched;

TEST(InstanceText, ParseAndFormat) {
    const Instance inst = io::parse_instance_line("3;0,5");
    EXPECT_EQ(inst, validate_instance({0, 5}, 3));
    EXPECT_EQ(io::format_instance_line(inst), "3;0,5");
    EXPECT_EQ(io::parse_instance_line("  2 ; 1, 4 ,9 \n"), validate_instance({1, 4, 9}, 2));
}

TEST(InstanceText, Errors) {
    auto code = [](std::string_view line) {
        try {
            io::parse_instance_line(line);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::invalid_argument;
    };
    EXPECT_EQ(code("0,5"), ErrorCode::parse_error);
    EXPECT_EQ(code("x;0,5"), ErrorCode::parse_error);
    EXPECT_EQ(code("1;0,,5"), ErrorCode::parse_error);
    EXPECT_EQ(code("1;"), ErrorCode::empty_instance);
    EXPECT_EQ(code("1;5,3"), ErrorCode::non_increasing_release);
    EXPECT_EQ(code("1;0,99999999999999999999"), ErrorCode::overflow);
}

TEST(InstanceText, FileSkipsCommentsAndBlanks) {
    std::istringstream in("# header\n\n1;0,1,2\n3;0,5\n");
    const auto all = io::read_instances(in);
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(all[1], validate_instance({0, 5}, 3));
}

TEST(SolutionJson, RoundTrip) {
    const Solution sol{{4, 5, 6}, {4}};
    const std::string text = io::solution_to_json(sol);
    EXPECT_EQ(text, R"({"replenishments":[4],"starts":[4,5,6]})");
    EXPECT_EQ(io::solution_from_json(text), sol);
    EXPECT_THROW(io::solution_from_json(R"({"starts":[1]})"), Error);
}
