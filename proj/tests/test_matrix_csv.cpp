#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>

#include "doctest.h"
#include "dcshap/csv.hpp"
#include "dcshap/error.hpp"
#include "dcshap/matrix.hpp"
#include "dcshap/serialize.hpp"
#include "support/test_util.hpp"

using namespace dcshap;

TEST_CASE("column medians handle odd and even row counts") {
    Matrix odd(3, 2);
    odd << 5, 1, 1, 2, 3, 9;
    const Vector m1 = column_medians(odd);
    CHECK(m1[0] == 3.0);
    CHECK(m1[1] == 2.0);

    Matrix even(4, 1);
    even << 4, 1, 3, 2;
    CHECK(column_medians(even)[0] == 2.5);
}

TEST_CASE("column means") {
    Matrix m(2, 2);
    m << 1, 10, 3, 30;
    const Vector means = column_means(m);
    CHECK(means[0] == 2.0);
    CHECK(means[1] == 20.0);
}

TEST_CASE("data matrix validation") {
    DataMatrix data;
    data.values = Matrix::Ones(2, 2);
    data.feature_names = {"a"};
    CHECK_THROWS_AS(data.validate(), DataError);

    data.feature_names = {"a", "b"};
    CHECK_NOTHROW(data.validate());

    data.values(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(data.validate(), DataError);
}

TEST_CASE("labeled dataset validation") {
    LabeledDataset ds;
    ds.features.values = Matrix::Zero(3, 1);
    ds.features.feature_names = {"a"};
    ds.labels = {0, 1};
    CHECK_THROWS_AS(ds.validate(), DataError);

    ds.labels = {0, 1, 0};
    CHECK_NOTHROW(ds.validate());
    CHECK(ds.num_classes() == 2);

    ds.labels = {0, 0, 0};
    CHECK_THROWS_AS(ds.validate(), DataError);

    ds.labels.clear();
    CHECK_NOTHROW(ds.validate());
    CHECK_FALSE(ds.has_labels());
}

TEST_CASE("vstack and hstack concatenate blocks") {
    Matrix a(1, 2), b(2, 2);
    a << 1, 2;
    b << 3, 4, 5, 6;
    const Matrix v = vstack({a, b});
    CHECK(v.rows() == 3);
    CHECK(v(2, 1) == 6.0);

    Matrix c(1, 1), d(1, 2);
    c << 7;
    d << 8, 9;
    const Matrix h = hstack({c, d});
    CHECK(h.cols() == 3);
    CHECK(h(0, 2) == 9.0);

    CHECK(vstack({}).rows() == 0);
}

namespace {

std::string write_csv(const std::string& name, const std::string& text) {
    const std::filesystem::path dir = "scratch/csv";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / name).string();
    write_text_file(path, text);
    return path;
}

}  // namespace

TEST_CASE("csv loads numeric and categorical feature columns") {
    const auto path = write_csv("mixed.csv",
                                "a,b,label\n"
                                "1.5,x,yes\n"
                                "2,y,no\n"
                                "3,x,yes\n");
    const LabeledDataset ds = load_csv(path, "label");
    CHECK(ds.features.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(ds.features.values(0, 0) == 1.5);
    // categorical codes are first-seen: x=0, y=1
    CHECK(ds.features.values(0, 1) == 0.0);
    CHECK(ds.features.values(1, 1) == 1.0);
    // text labels are encoded lexicographically: no=0, yes=1
    CHECK(ds.labels == std::vector<int>{1, 0, 1});
}

TEST_CASE("csv label ids do not depend on row order") {
    const auto forward = write_csv("f.csv", "a,l\n1,10\n2,2\n3,10\n");
    const auto reversed = write_csv("r.csv", "a,l\n3,10\n2,2\n1,10\n");
    const LabeledDataset f = load_csv(forward, "l");
    const LabeledDataset r = load_csv(reversed, "l");
    // numeric labels are encoded by ascending value: 2 -> 0, 10 -> 1
    CHECK(f.labels == std::vector<int>{1, 0, 1});
    CHECK(r.labels == std::vector<int>{1, 0, 1});
}

TEST_CASE("csv can take any column as the label") {
    const auto path = write_csv("mid.csv", "a,l,b\n1,p,4\n2,q,5\n");
    const LabeledDataset ds = load_csv(path, "l");
    CHECK(ds.features.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(ds.features.values(1, 1) == 5.0);
    CHECK(ds.labels == std::vector<int>{0, 1});
}

TEST_CASE("csv failure modes") {
    CHECK_THROWS_AS(load_csv("does_not_exist.csv", "l"), DataError);

    const auto ragged = write_csv("ragged.csv", "a,b,l\n1,2,0\n1,0\n");
    CHECK_THROWS_AS(load_csv(ragged, "l"), DataError);

    const auto missing = write_csv("missing.csv", "a,b\n1,2\n3,4\n");
    CHECK_THROWS_AS(load_csv(missing, "l"), DataError);

    const auto empty = write_csv("empty.csv", "a,l\n");
    CHECK_THROWS_AS(load_csv(empty, "l"), DataError);
}
