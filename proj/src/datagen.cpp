#include "dcshap/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "dcshap/error.hpp"
#include "dcshap/rng.hpp"
#include "dcshap/serialize.hpp"
#include "embedded_data.hpp"
#include "json.hpp"

namespace dcshap {
namespace {

std::string shortest(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fixed(double v, int decimals) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

int weighted_pick(Rng& rng, std::initializer_list<double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double t = rng.uniform(0.0, total);
    double acc = 0.0;
    int index = 0;
    for (double w : weights) {
        acc += w;
        if (t < acc) return index;
        ++index;
    }
    return static_cast<int>(weights.size()) - 1;
}

int clamp_int(double v, int lo, int hi) {
    const int x = static_cast<int>(std::lround(v));
    return std::min(hi, std::max(lo, x));
}

/// Marks the `positives` highest scores. Noise in the scores makes ties
/// impossible in practice, so the count is exact.
std::vector<int> labels_from_scores(const std::vector<double>& scores, int positives) {
    std::vector<double> sorted = scores;
    std::nth_element(sorted.begin(), sorted.begin() + (positives - 1), sorted.end(),
                     std::greater<double>());
    const double cut = sorted[static_cast<size_t>(positives - 1)];
    std::vector<int> labels(scores.size());
    for (size_t i = 0; i < scores.size(); ++i) labels[i] = scores[i] >= cut ? 1 : 0;
    return labels;
}

std::string iris_csv() {
    using namespace embedded;
    static const char* kSpecies[] = {"setosa", "versicolor", "virginica"};
    std::ostringstream out;
    out << "sepal_length,sepal_width,petal_length,petal_width,species\n";
    for (int i = 0; i < kIrisRows; ++i) {
        for (int j = 0; j < kIrisCols; ++j)
            out << shortest(kIrisValues[i * kIrisCols + j]) << ',';
        out << kSpecies[kIrisLabels[i]] << '\n';
    }
    return out.str();
}

std::string wine_csv() {
    using namespace embedded;
    std::ostringstream out;
    out << "alcohol,malic_acid,ash,alcalinity_of_ash,magnesium,total_phenols,"
           "flavanoids,nonflavanoid_phenols,proanthocyanins,color_intensity,hue,"
           "od280_od315,proline,class\n";
    for (int i = 0; i < kWineRows; ++i) {
        for (int j = 0; j < kWineCols; ++j)
            out << shortest(kWineValues[i * kWineCols + j]) << ',';
        out << "class_" << kWineLabels[i] << '\n';
    }
    return out.str();
}

std::string pima_csv() {
    constexpr int kRows = 768, kPositives = 268;
    constexpr double kNoise = 3.1;
    Rng rng(411001);

    struct Row {
        int pregnancies, glucose, pressure, skin, insulin, age;
        double bmi, pedigree;
    };
    std::vector<Row> rows(kRows);
    std::vector<double> scores(kRows);
    for (int i = 0; i < kRows; ++i) {
        Row& r = rows[i];
        // Latent traits drive most columns, mirroring the strong cross-column
        // structure of clinical tables: an age trait behind age/pregnancies, a
        // metabolic trait behind the blood measurements, and a lab trait
        // behind the two measurements that also go missing together (skin is
        // skipped outright, insulin is additionally censored below the assay
        // floor, so its zeros track both the skip and low lab values).
        const double health = rng.gaussian();
        const double aging = rng.gaussian();
        const double lab = 0.75 * health + 0.66 * rng.gaussian();
        const bool missing = rng.uniform() < 0.30;

        r.age = clamp_int(33.5 + 11.0 * aging + 2.8 * rng.gaussian(), 21, 81);
        r.pregnancies = clamp_int(3.8 + 2.9 * aging + 1.1 * rng.gaussian(), 0, 17);
        r.glucose = rng.uniform() < 0.007
                        ? 0
                        : clamp_int(120.0 + 22.0 * health + 6.0 * aging +
                                        16.0 * rng.gaussian(),
                                    44, 199);
        r.pressure = rng.uniform() < 0.045
                         ? 0
                         : clamp_int(72.0 + 6.5 * health + 5.5 * aging +
                                         8.0 * rng.gaussian(),
                                     24, 122);
        r.skin = missing ? 0 : clamp_int(29.0 + 9.3 * lab + 2.5 * rng.gaussian(), 7, 99);
        const double insulin_raw =
            std::exp(4.95 + 0.55 * lab + 0.20 * rng.gaussian());
        r.insulin = (missing || insulin_raw < 90.0) ? 0 : clamp_int(insulin_raw, 14, 846);
        r.bmi = std::min(67.1, std::max(18.2, 32.0 + 5.0 * health + 4.7 * rng.gaussian()));
        r.pedigree = 0.078 + 2.34 * std::pow(rng.uniform(), 3.0);

        scores[i] = 2.2 * (r.glucose - 120.0) / 29.0 + 0.9 * (r.bmi - 32.0) / 6.9 +
                    0.75 * (r.age - 33.5) / 11.5 + 0.35 * (r.pregnancies - 3.8) / 3.3 +
                    0.30 * (r.insulin > 150 ? 1.0 : 0.0) +
                    0.25 * (r.pedigree - 0.47) / 0.33 + kNoise * rng.gaussian();
    }
    const std::vector<int> labels = labels_from_scores(scores, kPositives);

    std::ostringstream out;
    out << "Pregnancies,Glucose,BloodPressure,SkinThickness,Insulin,BMI,"
           "DiabetesPedigreeFunction,Age,Outcome\n";
    for (int i = 0; i < kRows; ++i) {
        const Row& r = rows[i];
        out << r.pregnancies << ',' << r.glucose << ',' << r.pressure << ',' << r.skin
            << ',' << r.insulin << ',' << fixed(r.bmi, 1) << ',' << fixed(r.pedigree, 3)
            << ',' << r.age << ',' << labels[i] << '\n';
    }
    return out.str();
}

std::string heart_csv() {
    constexpr int kRows = 920, kPositives = 509;
    constexpr double kNoise = 0.72;
    Rng rng(520301);

    struct Row {
        int age, sex, cp, trestbps, chol, fbs, restecg, thalach, exang, slope, ca, thal;
        double oldpeak;
    };
    std::vector<Row> rows(kRows);
    std::vector<double> scores(kRows);
    for (int i = 0; i < kRows; ++i) {
        Row& r = rows[i];
        r.age = clamp_int(54.0 + 9.0 * rng.gaussian(), 28, 77);
        r.sex = rng.uniform() < 0.79 ? 1 : 0;
        r.cp = 1 + weighted_pick(rng, {0.08, 0.18, 0.22, 0.52});
        r.trestbps = clamp_int(131.0 + 17.0 * rng.gaussian(), 94, 200);
        r.chol = rng.uniform() < 0.10 ? 0 : clamp_int(244.0 + 52.0 * rng.gaussian(), 110, 564);
        r.fbs = rng.uniform() < 0.15 ? 1 : 0;
        r.restecg = weighted_pick(rng, {0.60, 0.20, 0.20});
        r.thalach = clamp_int(149.0 - 0.85 * (r.age - 54.0) + 19.0 * rng.gaussian(), 71, 202);
        r.exang = rng.uniform() < 0.33 + 0.28 * (r.cp == 4 ? 1.0 : 0.0) ? 1 : 0;
        r.oldpeak = std::max(0.0, -0.45 + 1.5 * std::abs(rng.gaussian()) *
                                       (r.exang ? 1.25 : 0.8));
        r.oldpeak = std::min(6.2, r.oldpeak);
        r.slope = 1 + weighted_pick(rng, {0.48, 0.42, 0.10});
        r.ca = weighted_pick(rng, {0.58, 0.21, 0.12, 0.09});
        r.thal = (r.sex == 1 && rng.uniform() < 0.45) || rng.uniform() < 0.20
                     ? 7
                     : (rng.uniform() < 0.07 ? 6 : 3);

        scores[i] = 1.00 * (r.cp == 4 ? 1.0 : 0.0) + 0.55 * (r.age - 54.0) / 9.0 -
                    1.25 * (r.thalach - 140.0) / 23.0 + 0.85 * r.exang +
                    0.80 * (r.oldpeak - 0.9) / 1.1 + 0.70 * (r.thal == 7 ? 1.0 : 0.0) +
                    0.55 * (r.ca >= 1 ? 1.0 : 0.0) + 0.30 * (r.slope >= 2 ? 1.0 : 0.0) +
                    0.25 * r.sex + kNoise * rng.gaussian();
    }
    const std::vector<int> labels = labels_from_scores(scores, kPositives);

    std::ostringstream out;
    out << "age,sex,cp,trestbps,chol,fbs,restecg,thalach,exang,oldpeak,slope,ca,thal,"
           "target\n";
    for (int i = 0; i < kRows; ++i) {
        const Row& r = rows[i];
        out << r.age << ',' << r.sex << ',' << r.cp << ',' << r.trestbps << ',' << r.chol
            << ',' << r.fbs << ',' << r.restecg << ',' << r.thalach << ',' << r.exang
            << ',' << fixed(r.oldpeak, 1) << ',' << r.slope << ',' << r.ca << ','
            << r.thal << ',' << labels[i] << '\n';
    }
    return out.str();
}

std::string adult_csv() {
    constexpr int kRows = 48842, kPositives = 11688;  // 23.93 percent
    constexpr double kNoise = 0.78;
    Rng rng(700113);

    static const char* kWorkclass[] = {"Private", "Self-emp-not-inc", "Local-gov", "?",
                                       "State-gov", "Self-emp-inc", "Federal-gov",
                                       "Without-pay", "Never-worked"};
    static const char* kEducation[] = {
        "Preschool", "1st-4th", "5th-6th", "7th-8th", "9th", "10th", "11th", "12th",
        "HS-grad", "Some-college", "Assoc-voc", "Assoc-acdm", "Bachelors", "Masters",
        "Prof-school", "Doctorate"};
    static const char* kMarital[] = {"Married-civ-spouse", "Never-married", "Divorced",
                                     "Separated", "Widowed", "Married-spouse-absent",
                                     "Married-AF-spouse"};
    static const char* kOccupation[] = {
        "Prof-specialty", "Craft-repair", "Exec-managerial", "Adm-clerical", "Sales",
        "Other-service", "Machine-op-inspct", "?", "Transport-moving",
        "Handlers-cleaners", "Farming-fishing", "Tech-support", "Protective-serv",
        "Priv-house-serv", "Armed-Forces"};
    static const double kOccupationPremium[] = {0.20, 0.04, 0.24, -0.02, 0.10, -0.16,
                                                -0.04, -0.06, 0.02, -0.12, -0.10, 0.12,
                                                0.10, -0.20, 0.00};
    static const char* kRelationship[] = {"Husband",       "Not-in-family", "Own-child",
                                          "Unmarried",     "Wife",          "Other-relative"};
    static const char* kRace[] = {"White", "Black", "Asian-Pac-Islander",
                                  "Amer-Indian-Eskimo", "Other"};
    static const char* kCountry[] = {"United-States", "Mexico", "?", "Philippines",
                                     "Germany", "Canada", "Puerto-Rico", "India",
                                     "El-Salvador", "Cuba", "England", "South"};

    struct Row {
        int age, fnlwgt, edu_num, cap_gain, cap_loss, hours;
        int workclass, marital, occupation, relationship, race, sex, country;
    };
    std::vector<Row> rows(kRows);
    std::vector<double> scores(kRows);
    for (int i = 0; i < kRows; ++i) {
        Row& r = rows[i];
        r.sex = rng.uniform() < 0.668 ? 1 : 0;  // 1 = Male
        r.age = 17 + static_cast<int>(std::floor(74.0 * std::pow(rng.uniform(), 1.45)));
        r.fnlwgt = 12285 + static_cast<int>(std::floor(
                               440000.0 * rng.uniform() * rng.uniform() + 77000.0 * rng.uniform()));
        r.edu_num = 1 + weighted_pick(rng, {0.001, 0.004, 0.007, 0.013, 0.011, 0.019,
                                            0.024, 0.009, 0.322, 0.223, 0.042, 0.033,
                                            0.164, 0.054, 0.012, 0.008});
        r.workclass = weighted_pick(rng, {0.694, 0.079, 0.064, 0.057, 0.041, 0.035,
                                          0.029, 0.0005, 0.0005});
        if (r.age < 26 && rng.uniform() < 0.8) {
            r.marital = 1;
        } else {
            r.marital = weighted_pick(rng, {0.458, 0.270, 0.136, 0.031, 0.031, 0.013,
                                            0.001});
        }
        r.occupation = r.workclass == 3 ? 7
                                        : weighted_pick(rng, {0.126, 0.125, 0.124, 0.115,
                                                              0.112, 0.101, 0.062, 0.0,
                                                              0.048, 0.042, 0.030, 0.029,
                                                              0.020, 0.005, 0.001});
        if (r.marital == 0) {
            r.relationship = r.sex == 1 ? 0 : 4;  // Husband / Wife
            if (rng.uniform() < 0.04) r.relationship = 1;
        } else {
            r.relationship = 1 + weighted_pick(rng, {0.43, 0.31, 0.21, 0.05});
        }
        r.race = weighted_pick(rng, {0.855, 0.096, 0.031, 0.010, 0.008});
        r.cap_gain = rng.uniform() < 0.917
                         ? 0
                         : (rng.uniform() < 0.025
                                ? 99999
                                : clamp_int(std::exp(7.6 + 1.1 * rng.gaussian()), 114, 98000));
        r.cap_loss = rng.uniform() < 0.953 ? 0 : clamp_int(1870.0 + 280.0 * rng.gaussian(), 155, 4356);
        r.hours = rng.uniform() < 0.46 ? 40 : clamp_int(40.5 + 12.5 * rng.gaussian(), 1, 99);
        r.country = weighted_pick(rng, {0.897, 0.020, 0.018, 0.0061, 0.0042, 0.0037,
                                        0.0037, 0.0031, 0.0032, 0.0028, 0.0026, 0.0024});

        scores[i] = 0.30 * (std::min(r.age, 62) - 17.0) / 45.0 * 2.0 - 0.30 +
                    0.80 * (r.edu_num - 10.0) / 2.6 +
                    1.10 * (r.marital == 0 ? 1.0 : -0.35) +
                    0.35 * (r.hours - 40.5) / 10.5 +
                    (r.cap_gain > 5000 ? 0.85 : (r.cap_gain > 0 ? 0.30 : 0.0)) +
                    0.22 * (r.cap_loss > 0 ? 1.0 : 0.0) + 0.18 * (r.sex == 1 ? 1.0 : -0.4) +
                    1.05 * kOccupationPremium[r.occupation] +
                    (r.workclass == 5 || r.workclass == 6 ? 0.18 : 0.0) +
                    kNoise * rng.gaussian();
    }
    const std::vector<int> labels = labels_from_scores(scores, kPositives);

    std::ostringstream out;
    out << "age,workclass,fnlwgt,education,education-num,marital-status,occupation,"
           "relationship,race,sex,capital-gain,capital-loss,hours-per-week,"
           "native-country,income\n";
    for (int i = 0; i < kRows; ++i) {
        const Row& r = rows[i];
        out << r.age << ',' << kWorkclass[r.workclass] << ',' << r.fnlwgt << ','
            << kEducation[r.edu_num - 1] << ',' << r.edu_num << ',' << kMarital[r.marital]
            << ',' << kOccupation[r.occupation] << ',' << kRelationship[r.relationship]
            << ',' << kRace[r.race] << ',' << (r.sex == 1 ? "Male" : "Female") << ','
            << r.cap_gain << ',' << r.cap_loss << ',' << r.hours << ','
            << kCountry[r.country] << ',' << (labels[i] == 1 ? ">50K" : "<=50K") << '\n';
    }
    return out.str();
}

}  // namespace

std::vector<GeneratedDataset> generate_datasets(const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create dataset directory: " + dir);

    const std::vector<GeneratedDataset> sets = {
        {"iris", "iris.csv", "species"},   {"wine", "wine.csv", "class"},
        {"pima", "pima.csv", "Outcome"},   {"heart", "heart.csv", "target"},
        {"adult", "adult.csv", "income"},
    };
    write_text_file((fs::path(dir) / "iris.csv").string(), iris_csv());
    write_text_file((fs::path(dir) / "wine.csv").string(), wine_csv());
    write_text_file((fs::path(dir) / "pima.csv").string(), pima_csv());
    write_text_file((fs::path(dir) / "heart.csv").string(), heart_csv());
    write_text_file((fs::path(dir) / "adult.csv").string(), adult_csv());

    nlohmann::json datasets;
    for (const auto& s : sets)
        datasets[s.name] = {{"path", s.file}, {"label_column", s.label_column}};
    nlohmann::json manifest;
    manifest["format_version"] = 1;
    manifest["kind"] = "dataset_manifest";
    manifest["datasets"] = std::move(datasets);
    write_text_file((fs::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    return sets;
}

}  // namespace dcshap
