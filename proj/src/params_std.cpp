#include "entropoid/params_std.hpp"

#include <map>

namespace entropoid {

namespace {

struct RawParams {
    const char* p;
    const char* a3;
    const char* a8;
    const char* b2;
    const char* b7;
    const char* g1; // frozen full generator, empty when unknown
    const char* g2;
};

// Small classic instances plus frozen crypto-size sets (tools/mkparams,
// seed 424242; validity is re-checked by the test suite).
const std::map<std::string, RawParams>& raw_table() {
    static const std::map<std::string, RawParams> table{
        {"e7", {"7", "6", "3", "3", "4", "0", "2"}},
        {"e11", {"11", "9", "1", "8", "9", "0", "3"}},
        {"e13", {"13", "10", "2", "3", "9", "0", "10"}},
        {"e19", {"19", "18", "11", "14", "10", "0", "3"}},
        {"e23", {"23", "15", "13", "9", "14", "0", "0"}},
        {"e49223", {"49223", "33170", "13052", "12476", "19648", "21287", "34883"}},
        {"p128", {"230323658535193727728251504491414654279", "119746262258668652888593400395098060193", "44106528646133622375654160089218990301", "156541041971963374828869479737170657186", "37062636590778450646061962618604048313", "76214237741345189809892375720611936380", "27213783110258882855863817109874030454"}},
        {"p192", {"3669150390416646897558114011780697232417239306339744219167", "2930602357089946801845222195774313065588120555535251118324", "1896436210513659794941484800452893087574220714394148724064", "176483876810157367527737445168368710942079368382172441295", "2865481711543324154501665498370822248018342499788375828740", "2109136126920588387930753052127393344588015689389669844979", "2923961314322752613675102541056127795205007362653555815237"}},
        {"p256", {"72192501945139152475877294683557259190454252523288228059662343854133453684263", "233212830208470519082062286418324692009094761838518717910451997337480155291", "46263312495636280518434761010451860156732703902688894045640094618370329308807", "4433034225192270444390926479101453055384669472898457644795316372299431551897", "8855405921826765766538324187454886579515460041790328352301584373419476457480", "43355909440536188183104285245986000094021732574027881862051771817384564253128", "67732486609019976341532074989285966895354189624953728665156911492694660331670"}},
        {"p384", {"33578880493352597674153812246577274309550710189619940009977790494536769379632470471856204853442258278856032516976663", "15813423855359116447775020599113960887816378001106027260291880515921976476379246742952173298552173875120613825784390", "631319544116467892637024049432296671154300883156685214628522988668264801154642534503099628792604049109402290117677", "31562915257085402523846720228464196743823715369314052397148674257420309895599061990281640913477354044237898928880349", "132916315645200777599569429543607080569200619571780794080201977597743893506759814725818413750025803123125878378915", "7209388055586628427632101868442665654512324359532387812823263280193845429139223786889006334456169703297924411169840", "17919226088080813091900357579507854734694879724630996039042853458337586896241165715849585703794155770407415968763522"}},
        {"p512", {"8074111739382856212919372175538316879234812580902857398185525676188310970339338958246288939479296605858195639873137901743246626047397873097395322110259607", "4840045626085320577282328932425871448503431130979291795838407778637822242947207726148502330009098487481557560886854594500027094018969272862693419244049168", "6718954259949504839585135012466085747304140597572370114852942086420530233598106283232672365871554870348736859998703904271889737521880981500005467937883972", "495134281789885638031662903058310926659975626663726495661671519420659832156507672011062708367728877155075748586483984133699887579318581879101813750548622", "6263588689764721729714343133975734026899836297579273094815822909629483409077301100561299277136685835170254817993867388798694994059313921027864260677128634", "3383720246363051342474653835832866715586275735442634702253989412769784274736968767331245535626458689142584808006518020432667903487684708218339651411018586", "4767633786409784426585349091425006691095442947574412966481403149422912376429284033330021229054353554724134440150800274837050703262548852319514034736677540"}},
    };
    return table;
}

const RawParams& find_raw(const std::string& name) {
    const auto& table = raw_table();
    const auto it = table.find(name);
    if (it == table.end())
        throw InvalidConstant("unknown parameter set: " + name);
    return it->second;
}

} // namespace

std::vector<std::string> std_entropoid_names() {
    std::vector<std::string> names;
    for (const auto& [name, raw] : raw_table()) names.push_back(name);
    return names;
}

EntropoidParams std_entropoid(const std::string& name) {
    const RawParams& raw = find_raw(name);
    const PrimeModulus m = modulus_from_prime(mpz_class(raw.p));
    return params_new(m, mpz_class(raw.a3), mpz_class(raw.a8),
                      mpz_class(raw.b2), mpz_class(raw.b7));
}

Element std_generator(const std::string& name) {
    const RawParams& raw = find_raw(name);
    if (!*raw.g1) throw InvalidConstant("no frozen generator for " + name);
    return {mpz_class(raw.g1), mpz_class(raw.g2)};
}

KexSuite std_kex_suite(unsigned lambda, unsigned base) {
    if (lambda != 128 && lambda != 256)
        throw InvalidConstant("standard kex suites use lambda 128 or 256");
    const std::string name = "p" + std::to_string(lambda);
    const EntropoidParams E = std_entropoid(name);
    GeneratorCertificate cert = certify_generator(E, std_generator(name));
    if (!cert.all_checks())
        throw InvalidConstant("frozen generator failed its checks");
    // g_q is the fixed 6-factor shape of the frozen full generator.
    cert.g = sylow_shape(E, cert.g);
    cert.claimed_order = E.m.q * E.m.q;
    return suite_from_params(E, cert, base);
}

SigParams std_sig_params(Scheme scheme, unsigned lambda) {
    if (scheme == Scheme::Cderp) {
        if (lambda != 128 && lambda != 192 && lambda != 256)
            throw InvalidConstant("Cderp uses lambda 128, 192 or 256");
    } else {
        if (lambda != 256 && lambda != 384 && lambda != 512)
            throw InvalidConstant("CderpToDelp uses lambda 256, 384 or 512");
    }
    return sig_params_for(std_entropoid("p" + std::to_string(lambda)), scheme);
}

} // namespace entropoid
