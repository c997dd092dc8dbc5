#include "hopbench/wordpools.hpp"

#include <algorithm>
#include <array>

namespace hopbench::pools {
namespace {

const std::array<const char*, 764> kGivenNames = {
    "Emma", "Olivia", "Ava", "Sophia", "Isabella", "Mia", "Amelia", "Harper", "Evelyn", "Abigail",
    "Emily", "Ella", "Scarlett", "Grace", "Chloe", "Victoria", "Riley", "Aria", "Lily", "Nora",
    "Zoey", "Mila", "Aubrey", "Hannah", "Layla", "Addison", "Eleanor", "Natalie", "Luna",
    "Savannah", "Brooklyn", "Leah", "Zoe", "Stella", "Hazel", "Aurora", "Violet", "Audrey",
    "Bella", "Claire", "Skylar", "Lucy", "Paisley", "Anna", "Caroline", "Genesis", "Kennedy",
    "Sadie", "Gabriella", "Madelyn", "Adeline", "Maya", "Autumn", "Piper", "Ruby", "Serenity",
    "Willow", "Everly", "Naomi", "Elena", "Eliana", "Valentina", "Cora", "Alice", "Vivian",
    "Clara", "Josephine", "Delilah", "Sophie", "Iris", "Sarah", "Jade", "Margaret", "Juliana",
    "Athena", "Rose", "Lydia", "Diana", "Teresa", "Helena", "Miriam", "Vera", "Flora", "Agnes",
    "Edith", "Mabel", "Opal", "Pearl", "Liam", "Noah", "William", "James", "Logan", "Benjamin",
    "Mason", "Elijah", "Oliver", "Jacob", "Lucas", "Michael", "Alexander", "Ethan", "Daniel",
    "Matthew", "Aiden", "Henry", "Joseph", "Jackson", "Samuel", "Sebastian", "David", "Carter",
    "Wyatt", "Jayden", "John", "Owen", "Dylan", "Luke", "Gabriel", "Anthony", "Isaac", "Grayson",
    "Jack", "Julian", "Levi", "Christopher", "Joshua", "Andrew", "Lincoln", "Mateo", "Ryan",
    "Nathan", "Aaron", "Isaiah", "Thomas", "Charles", "Caleb", "Josiah", "Christian", "Hunter",
    "Eli", "Jonathan", "Connor", "Landon", "Adrian", "Asher", "Cameron", "Leo", "Theodore",
    "Jeremiah", "Hudson", "Robert", "Easton", "Nolan", "Nicholas", "Ezra", "Colton", "Angel",
    "Brayden", "Jordan", "Dominic", "Austin", "Ian", "Adam", "Elias", "Jose", "Ezekiel", "Carson",
    "Evan", "Maverick", "Bryson", "Jace", "Cooper", "Xavier", "Parker", "Roman", "Jason",
    "Santiago", "Chase", "Sawyer", "Gavin", "Leonardo", "Kayden", "Ayden", "Jameson", "Kevin",
    "Bentley", "Zachary", "Everett", "Axel", "Tyler", "Micah", "Vincent", "Weston", "Miles",
    "Wesley", "Nathaniel", "Harrison", "Brandon", "Cole", "Declan", "Luis", "Braxton", "Damian",
    "Silas", "Tristan", "Ryder", "Bennett", "George", "Emmett", "Justin", "Kai", "Max", "Diego",
    "Luca", "Ryker", "Carlos", "Maxwell", "Kingston", "Ivan", "Maddox", "Juan", "Ashton", "Rowan",
    "Giovanni", "Eric", "Jesus", "Calvin", "Abel", "King", "Camden", "Amir", "Blake", "Alex",
    "Brody", "Malachi", "Emmanuel", "Jonah", "Marcus", "Abraham", "Laila", "Karen", "Edwin",
    "Arthur", "Walter", "Harold", "Eugene", "Ralph", "Howard", "Francis", "Albert", "Ernest",
    "Leon", "Stanley", "Norman", "Vernon", "Lloyd", "Cecil", "Patricia", "Barbara", "Elizabeth",
    "Jennifer", "Maria", "Susan", "Dorothy", "Linda", "Betty", "Sandra", "Carol", "Ruth", "Sharon",
    "Michelle", "Laura", "Kimberly", "Deborah", "Jessica", "Shirley", "Cynthia", "Angela",
    "Melissa", "Brenda", "Amy", "Kathleen", "Alia", "Aline", "Alis", "Alen", "Alon", "Alan",
    "Alric", "Alda", "Aleth", "Alwyn", "Alora", "Alina", "Alio", "Arine", "Aris", "Aren", "Aron",
    "Aran", "Arric", "Arda", "Areth", "Arwyn", "Arora", "Arina", "Ario", "Bela", "Belia", "Beline",
    "Belis", "Belen", "Belon", "Belan", "Belric", "Belda", "Beleth", "Belwyn", "Belora", "Belina",
    "Belio", "Brena", "Brenia", "Brenine", "Brenis", "Brenen", "Brenon", "Brenan", "Brenric",
    "Breneth", "Brenwyn", "Brenora", "Brenina", "Brenio", "Cala", "Calia", "Caline", "Calis",
    "Calen", "Calon", "Calan", "Calric", "Calda", "Caleth", "Calwyn", "Calora", "Calina", "Calio",
    "Coria", "Corine", "Coris", "Coren", "Coron", "Coran", "Corric", "Corda", "Coreth", "Corwyn",
    "Corora", "Corina", "Corio", "Dara", "Daria", "Darine", "Daris", "Daren", "Daron", "Daran",
    "Darric", "Darda", "Dareth", "Darwyn", "Darora", "Darina", "Dario", "Dela", "Delia", "Deline",
    "Delis", "Delen", "Delon", "Delan", "Delric", "Delda", "Deleth", "Delwyn", "Delora", "Delina",
    "Delio", "Elia", "Eline", "Elis", "Elen", "Elon", "Elan", "Elric", "Elda", "Eleth", "Elwyn",
    "Elora", "Elina", "Elio", "Fena", "Fenia", "Fenine", "Fenis", "Fenen", "Fenon", "Fenan",
    "Fenric", "Fenda", "Feneth", "Fenwyn", "Fenora", "Fenina", "Fenio", "Gara", "Garia", "Garine",
    "Garis", "Garen", "Garon", "Garan", "Garric", "Garda", "Gareth", "Garwyn", "Garora", "Garina",
    "Gario", "Hala", "Halia", "Haline", "Halis", "Halen", "Halon", "Halan", "Halric", "Halda",
    "Haleth", "Halwyn", "Halora", "Halina", "Halio", "Jora", "Joria", "Jorine", "Joris", "Joren",
    "Joron", "Joran", "Jorric", "Jorda", "Joreth", "Jorwyn", "Jorora", "Jorina", "Jorio", "Kela",
    "Kelia", "Keline", "Kelis", "Kelen", "Kelon", "Kelan", "Kelric", "Kelda", "Keleth", "Kelwyn",
    "Kelora", "Kelina", "Kelio", "Lana", "Lania", "Lanine", "Lanis", "Lanen", "Lanon", "Lanan",
    "Lanric", "Landa", "Laneth", "Lanwyn", "Lanora", "Lanina", "Lanio", "Lora", "Loria", "Lorine",
    "Loris", "Loren", "Loron", "Loran", "Lorric", "Lorda", "Loreth", "Lorwyn", "Lorora", "Lorina",
    "Lorio", "Mara", "Marine", "Maris", "Maren", "Maron", "Maran", "Marric", "Marda", "Mareth",
    "Marwyn", "Marora", "Marina", "Mario", "Mera", "Meria", "Merine", "Meris", "Meren", "Meron",
    "Meran", "Merric", "Merda", "Mereth", "Merwyn", "Merora", "Merina", "Merio", "Nela", "Nelia",
    "Neline", "Nelis", "Nelen", "Nelon", "Nelan", "Nelric", "Nelda", "Neleth", "Nelwyn", "Nelora",
    "Nelina", "Nelio", "Oria", "Orine", "Oris", "Oren", "Oron", "Oran", "Orric", "Orda", "Oreth",
    "Orwyn", "Orora", "Orina", "Orio", "Pera", "Peria", "Perine", "Peris", "Peren", "Peron",
    "Peran", "Perric", "Perda", "Pereth", "Perwyn", "Perora", "Perina", "Perio", "Quina", "Quinia",
    "Quinine", "Quinis", "Quinen", "Quinon", "Quinan", "Quinric", "Quinda", "Quineth", "Quinwyn",
    "Quinora", "Quinina", "Quinio", "Rala", "Ralia", "Raline", "Ralis", "Ralen", "Ralon", "Ralan",
    "Ralric", "Ralda", "Raleth", "Ralwyn", "Ralora", "Ralina", "Ralio", "Sela", "Selia", "Seline",
    "Selis", "Selen", "Selon", "Selan", "Selric", "Selda", "Seleth", "Selwyn", "Selora", "Selina",
    "Selio", "Tama", "Tamia", "Tamine", "Tamis", "Tamen", "Tamon", "Taman", "Tamric", "Tamda",
    "Tameth", "Tamwyn", "Tamora", "Tamina", "Tamio", "Thala", "Thalia", "Thaline", "Thalis",
    "Thalen", "Thalon", "Thalan", "Thalric", "Thalda", "Thaleth", "Thalwyn", "Thalora", "Thalina",
    "Thalio", "Ulia", "Uline", "Ulis", "Ulen", "Ulon", "Ulan", "Ulric", "Ulda", "Uleth", "Ulwyn",
    "Ulora", "Ulina", "Ulio", "Vela", "Velia", "Veline", "Velis", "Velen", "Velon", "Velan",
    "Velric", "Velda", "Veleth", "Velwyn", "Velora", "Velina", "Velio", "Wena", "Wenia", "Wenine",
    "Wenis", "Wenen", "Wenon", "Wenan", "Wenric", "Wenda", "Weneth", "Wenwyn", "Wenora", "Wenina",
    "Wenio", "Yora", "Yoria", "Yorine", "Yoris", "Yoren", "Yoron", "Yoran", "Yorric", "Yorda",
    "Yoreth", "Yorwyn", "Yorora", "Yorina", "Yorio", "Zana", "Zania", "Zanine", "Zanis", "Zanen",
    "Zanon", "Zanan", "Zanric", "Zanda", "Zaneth", "Zanwyn", "Zanora", "Zanina", "Zanio", "Brama",
    "Bramia", "Bramine", "Bramis", "Bramen", "Bramon", "Braman", "Bramric", "Bramda", "Brameth",
    "Bramwyn", "Bramora", "Bramina", "Bramio", "Casa", "Casia", "Casine", "Casis", "Casen",
    "Cason", "Casan", "Casric", "Casda", "Caseth", "Caswyn", "Casora", "Casina", "Casio", "Dora",
    "Doria", "Dorine", "Doris", "Doren", "Doron", "Doran", "Dorric", "Dorda", "Doreth", "Dorwyn",
    "Dorora", "Dorina", "Dorio", "Fala", "Falia", "Faline", "Falis", "Falen", "Falon", "Falan",
    "Falric", "Falda", "Faleth", "Falwyn", "Falora", "Falina", "Falio"
};
const std::array<const char*, 286> kSurnames = {
    "Smith", "Johnson", "Brown", "Jones", "Garcia", "Miller", "Davis", "Rodriguez", "Martinez",
    "Hernandez", "Lopez", "Gonzalez", "Wilson", "Anderson", "Taylor", "Moore", "Martin", "Lee",
    "Perez", "Thompson", "White", "Harris", "Sanchez", "Clark", "Ramirez", "Lewis", "Robinson",
    "Walker", "Young", "Allen", "Scott", "Torres", "Nguyen", "Hill", "Flores", "Green", "Adams",
    "Nelson", "Baker", "Hall", "Rivera", "Campbell", "Mitchell", "Roberts", "Gomez", "Phillips",
    "Evans", "Turner", "Diaz", "Cruz", "Edwards", "Collins", "Reyes", "Stewart", "Morris",
    "Morales", "Murphy", "Cook", "Rogers", "Gutierrez", "Ortiz", "Morgan", "Peterson", "Bailey",
    "Reed", "Kelly", "Ramos", "Kim", "Cox", "Ward", "Richardson", "Watson", "Brooks", "Chavez",
    "Gray", "Mendoza", "Ruiz", "Hughes", "Price", "Alvarez", "Castillo", "Sanders", "Patel",
    "Myers", "Long", "Ross", "Foster", "Jimenez", "Hartwell", "Hartmore", "Hartley", "Hartton",
    "Hartby", "Hartcombe", "Hartworth", "Hartstead", "Hartwick", "Hartham", "Whitwell", "Whitmore",
    "Whitley", "Whitton", "Whitby", "Whitcombe", "Whitworth", "Whitstead", "Whitwick", "Whitham",
    "Blackwell", "Blackmore", "Blackley", "Blackton", "Blackby", "Blackcombe", "Blackworth",
    "Blackstead", "Blackwick", "Blackham", "Fairwell", "Fairmore", "Fairley", "Fairton", "Fairby",
    "Faircombe", "Fairworth", "Fairstead", "Fairwick", "Fairham", "Goldwell", "Goldmore",
    "Goldley", "Goldton", "Goldby", "Goldcombe", "Goldworth", "Goldstead", "Goldwick", "Goldham",
    "Stratwell", "Stratmore", "Stratley", "Stratton", "Stratby", "Stratcombe", "Stratworth",
    "Stratstead", "Stratwick", "Stratham", "Winwell", "Winmore", "Winley", "Winton", "Winby",
    "Wincombe", "Winworth", "Winstead", "Winwick", "Winham", "Ashwell", "Ashmore", "Ashley",
    "Ashby", "Ashcombe", "Ashworth", "Ashstead", "Ashwick", "Ashham", "Thornwell", "Thornmore",
    "Thornley", "Thornton", "Thornby", "Thorncombe", "Thornworth", "Thornstead", "Thornwick",
    "Thornham", "Granwell", "Granmore", "Granley", "Granton", "Granby", "Grancombe", "Granworth",
    "Granstead", "Granwick", "Granham", "Merwell", "Mermore", "Merley", "Merton", "Merby",
    "Mercombe", "Merworth", "Merstead", "Merwick", "Merham", "Kirkwell", "Kirkmore", "Kirkley",
    "Kirkton", "Kirkby", "Kirkcombe", "Kirkworth", "Kirkstead", "Kirkwick", "Kirkham", "Langwell",
    "Langmore", "Langley", "Langton", "Langby", "Langcombe", "Langworth", "Langstead", "Langwick",
    "Langham", "Holwell", "Holmore", "Holley", "Holton", "Holby", "Holcombe", "Holworth",
    "Holstead", "Holwick", "Holham", "Pemwell", "Pemmore", "Pemley", "Pemton", "Pemby", "Pemcombe",
    "Pemworth", "Pemstead", "Pemwick", "Pemham", "Wardwell", "Wardmore", "Wardley", "Wardton",
    "Wardby", "Wardcombe", "Wardworth", "Wardstead", "Wardwick", "Wardham", "Ellswell", "Ellsmore",
    "Ellsley", "Ellston", "Ellsby", "Ellscombe", "Ellsworth", "Ellsstead", "Ellswick", "Ellsham",
    "Croftwell", "Croftmore", "Croftley", "Croftton", "Croftby", "Croftcombe", "Croftworth",
    "Croftstead", "Croftwick", "Croftham", "Renwell", "Renmore", "Renley", "Renton", "Renby",
    "Rencombe", "Renworth", "Renstead", "Renwick", "Renham", "Stanwell", "Stanmore", "Stanton",
    "Stanby", "Stancombe", "Stanworth", "Stanstead", "Stanwick", "Stanham"
};
const std::array<const char*, 600> kOrgRoots = {
    "Brightline", "Brightworks", "Brightforge", "Brightpath", "Brightgate", "Brightspan",
    "Brightcrest", "Brightvale", "Brightreach", "Brightpoint", "Brightarc", "Brightcore",
    "Brightflow", "Brightgrid", "Brightloom", "Brightmark", "Brightnest", "Brightpeak",
    "Brightquill", "Brightroot", "Northline", "Northworks", "Northforge", "Northpath", "Northgate",
    "Northspan", "Northcrest", "Northvale", "Northreach", "Northpoint", "Northarc", "Northcore",
    "Northflow", "Northgrid", "Northloom", "Northmark", "Northnest", "Northpeak", "Northquill",
    "Northroot", "Southline", "Southworks", "Southforge", "Southpath", "Southgate", "Southspan",
    "Southcrest", "Southvale", "Southreach", "Southpoint", "Southarc", "Southcore", "Southflow",
    "Southgrid", "Southloom", "Southmark", "Southnest", "Southpeak", "Southquill", "Southroot",
    "Eastline", "Eastworks", "Eastforge", "Eastpath", "Eastgate", "Eastspan", "Eastcrest",
    "Eastvale", "Eastreach", "Eastpoint", "Eastarc", "Eastcore", "Eastflow", "Eastgrid",
    "Eastloom", "Eastmark", "Eastnest", "Eastpeak", "Eastquill", "Eastroot", "Westline",
    "Westworks", "Westforge", "Westpath", "Westgate", "Westspan", "Westcrest", "Westvale",
    "Westreach", "Westpoint", "Westarc", "Westcore", "Westflow", "Westgrid", "Westloom",
    "Westmark", "Westnest", "Westpeak", "Westquill", "Westroot", "Clearline", "Clearworks",
    "Clearforge", "Clearpath", "Cleargate", "Clearspan", "Clearcrest", "Clearvale", "Clearreach",
    "Clearpoint", "Cleararc", "Clearcore", "Clearflow", "Cleargrid", "Clearloom", "Clearmark",
    "Clearnest", "Clearpeak", "Clearquill", "Clearroot", "Ironline", "Ironworks", "Ironforge",
    "Ironpath", "Irongate", "Ironspan", "Ironcrest", "Ironvale", "Ironreach", "Ironpoint",
    "Ironarc", "Ironcore", "Ironflow", "Irongrid", "Ironloom", "Ironmark", "Ironnest", "Ironpeak",
    "Ironquill", "Ironroot", "Stoneline", "Stoneworks", "Stoneforge", "Stonepath", "Stonegate",
    "Stonespan", "Stonecrest", "Stonevale", "Stonereach", "Stonepoint", "Stonearc", "Stonecore",
    "Stoneflow", "Stonegrid", "Stoneloom", "Stonemark", "Stonenest", "Stonepeak", "Stonequill",
    "Stoneroot", "Silverline", "Silverworks", "Silverforge", "Silverpath", "Silvergate",
    "Silverspan", "Silvercrest", "Silvervale", "Silverreach", "Silverpoint", "Silverarc",
    "Silvercore", "Silverflow", "Silvergrid", "Silverloom", "Silvermark", "Silvernest",
    "Silverpeak", "Silverquill", "Silverroot", "Copperline", "Copperworks", "Copperforge",
    "Copperpath", "Coppergate", "Copperspan", "Coppercrest", "Coppervale", "Copperreach",
    "Copperpoint", "Copperarc", "Coppercore", "Copperflow", "Coppergrid", "Copperloom",
    "Coppermark", "Coppernest", "Copperpeak", "Copperquill", "Copperroot", "Blueline", "Blueworks",
    "Blueforge", "Bluepath", "Bluegate", "Bluespan", "Bluecrest", "Bluevale", "Bluereach",
    "Bluepoint", "Bluearc", "Bluecore", "Blueflow", "Bluegrid", "Blueloom", "Bluemark", "Bluenest",
    "Bluepeak", "Bluequill", "Blueroot", "Redline", "Redworks", "Redforge", "Redpath", "Redgate",
    "Redspan", "Redcrest", "Redvale", "Redreach", "Redpoint", "Redarc", "Redcore", "Redflow",
    "Redgrid", "Redloom", "Redmark", "Rednest", "Redpeak", "Redquill", "Redroot", "Greyline",
    "Greyworks", "Greyforge", "Greypath", "Greygate", "Greyspan", "Greycrest", "Greyvale",
    "Greyreach", "Greypoint", "Greyarc", "Greycore", "Greyflow", "Greygrid", "Greyloom",
    "Greymark", "Greynest", "Greypeak", "Greyquill", "Greyroot", "Greenline", "Greenworks",
    "Greenforge", "Greenpath", "Greengate", "Greenspan", "Greencrest", "Greenvale", "Greenreach",
    "Greenpoint", "Greenarc", "Greencore", "Greenflow", "Greengrid", "Greenloom", "Greenmark",
    "Greennest", "Greenpeak", "Greenquill", "Greenroot", "Swiftline", "Swiftworks", "Swiftforge",
    "Swiftpath", "Swiftgate", "Swiftspan", "Swiftcrest", "Swiftvale", "Swiftreach", "Swiftpoint",
    "Swiftarc", "Swiftcore", "Swiftflow", "Swiftgrid", "Swiftloom", "Swiftmark", "Swiftnest",
    "Swiftpeak", "Swiftquill", "Swiftroot", "Trueline", "Trueworks", "Trueforge", "Truepath",
    "Truegate", "Truespan", "Truecrest", "Truevale", "Truereach", "Truepoint", "Truearc",
    "Truecore", "Trueflow", "Truegrid", "Trueloom", "Truemark", "Truenest", "Truepeak",
    "Truequill", "Trueroot", "Highline", "Highworks", "Highforge", "Highpath", "Highgate",
    "Highspan", "Highcrest", "Highvale", "Highreach", "Highpoint", "Higharc", "Highcore",
    "Highflow", "Highgrid", "Highloom", "Highmark", "Highnest", "Highpeak", "Highquill",
    "Highroot", "Deepline", "Deepworks", "Deepforge", "Deeppath", "Deepgate", "Deepspan",
    "Deepcrest", "Deepvale", "Deepreach", "Deeppoint", "Deeparc", "Deepcore", "Deepflow",
    "Deepgrid", "Deeploom", "Deepmark", "Deepnest", "Deeppeak", "Deepquill", "Deeproot",
    "Broadline", "Broadworks", "Broadforge", "Broadpath", "Broadgate", "Broadspan", "Broadcrest",
    "Broadvale", "Broadreach", "Broadpoint", "Broadarc", "Broadcore", "Broadflow", "Broadgrid",
    "Broadloom", "Broadmark", "Broadnest", "Broadpeak", "Broadquill", "Broadroot", "Longline",
    "Longworks", "Longforge", "Longpath", "Longgate", "Longspan", "Longcrest", "Longvale",
    "Longreach", "Longpoint", "Longarc", "Longcore", "Longflow", "Longgrid", "Longloom",
    "Longmark", "Longnest", "Longpeak", "Longquill", "Longroot", "Starline", "Starworks",
    "Starforge", "Starpath", "Stargate", "Starspan", "Starcrest", "Starvale", "Starreach",
    "Starpoint", "Stararc", "Starcore", "Starflow", "Stargrid", "Starloom", "Starmark", "Starnest",
    "Starpeak", "Starquill", "Starroot", "Sunline", "Sunworks", "Sunforge", "Sunpath", "Sungate",
    "Sunspan", "Suncrest", "Sunvale", "Sunreach", "Sunpoint", "Sunarc", "Suncore", "Sunflow",
    "Sungrid", "Sunloom", "Sunmark", "Sunnest", "Sunpeak", "Sunquill", "Sunroot", "Moonline",
    "Moonworks", "Moonforge", "Moonpath", "Moongate", "Moonspan", "Mooncrest", "Moonvale",
    "Moonreach", "Moonpoint", "Moonarc", "Mooncore", "Moonflow", "Moongrid", "Moonloom",
    "Moonmark", "Moonnest", "Moonpeak", "Moonquill", "Moonroot", "Cloudline", "Cloudworks",
    "Cloudforge", "Cloudpath", "Cloudgate", "Cloudspan", "Cloudcrest", "Cloudvale", "Cloudreach",
    "Cloudpoint", "Cloudarc", "Cloudcore", "Cloudflow", "Cloudgrid", "Cloudloom", "Cloudmark",
    "Cloudnest", "Cloudpeak", "Cloudquill", "Cloudroot", "Rainline", "Rainworks", "Rainforge",
    "Rainpath", "Raingate", "Rainspan", "Raincrest", "Rainvale", "Rainreach", "Rainpoint",
    "Rainarc", "Raincore", "Rainflow", "Raingrid", "Rainloom", "Rainmark", "Rainnest", "Rainpeak",
    "Rainquill", "Rainroot", "Snowline", "Snowworks", "Snowforge", "Snowpath", "Snowgate",
    "Snowspan", "Snowcrest", "Snowvale", "Snowreach", "Snowpoint", "Snowarc", "Snowcore",
    "Snowflow", "Snowgrid", "Snowloom", "Snowmark", "Snownest", "Snowpeak", "Snowquill",
    "Snowroot", "Windline", "Windworks", "Windforge", "Windpath", "Windgate", "Windspan",
    "Windcrest", "Windvale", "Windreach", "Windpoint", "Windarc", "Windcore", "Windflow",
    "Windgrid", "Windloom", "Windmark", "Windnest", "Windpeak", "Windquill", "Windroot",
    "Stormline", "Stormworks", "Stormforge", "Stormpath", "Stormgate", "Stormspan", "Stormcrest",
    "Stormvale", "Stormreach", "Stormpoint", "Stormarc", "Stormcore", "Stormflow", "Stormgrid",
    "Stormloom", "Stormmark", "Stormnest", "Stormpeak", "Stormquill", "Stormroot", "Riverline",
    "Riverworks", "Riverforge", "Riverpath", "Rivergate", "Riverspan", "Rivercrest", "Rivervale",
    "Riverreach", "Riverpoint", "Riverarc", "Rivercore", "Riverflow", "Rivergrid", "Riverloom",
    "Rivermark", "Rivernest", "Riverpeak", "Riverquill", "Riverroot", "Ridgeline", "Ridgeworks",
    "Ridgeforge", "Ridgepath", "Ridgegate", "Ridgespan", "Ridgecrest", "Ridgevale", "Ridgereach",
    "Ridgepoint", "Ridgearc", "Ridgecore", "Ridgeflow", "Ridgegrid", "Ridgeloom", "Ridgemark",
    "Ridgenest", "Ridgepeak", "Ridgequill", "Ridgeroot"
};
const std::array<const char*, 200> kPlaceNames = {
    "Lakewood", "Lakeville", "Lakefield", "Lakeford", "Lakedale", "Lakeport", "Lakehaven",
    "Lakeburg", "Lakemont", "Lakeshore", "Fernwood", "Fernville", "Fernfield", "Fernford",
    "Ferndale", "Fernport", "Fernhaven", "Fernburg", "Fernmont", "Fernshore", "Oakwood",
    "Oakville", "Oakfield", "Oakford", "Oakdale", "Oakport", "Oakhaven", "Oakburg", "Oakmont",
    "Oakshore", "Maplewood", "Mapleville", "Maplefield", "Mapleford", "Mapledale", "Mapleport",
    "Maplehaven", "Mapleburg", "Maplemont", "Mapleshore", "Cedarwood", "Cedarville", "Cedarfield",
    "Cedarford", "Cedardale", "Cedarport", "Cedarhaven", "Cedarburg", "Cedarmont", "Cedarshore",
    "Birchwood", "Birchville", "Birchfield", "Birchford", "Birchdale", "Birchport", "Birchhaven",
    "Birchburg", "Birchmont", "Birchshore", "Elmwood", "Elmville", "Elmfield", "Elmford",
    "Elmdale", "Elmport", "Elmhaven", "Elmburg", "Elmmont", "Elmshore", "Pinewood", "Pineville",
    "Pinefield", "Pineford", "Pinedale", "Pineport", "Pinehaven", "Pineburg", "Pinemont",
    "Pineshore", "Willowwood", "Willowville", "Willowfield", "Willowford", "Willowdale",
    "Willowport", "Willowhaven", "Willowburg", "Willowmont", "Willowshore", "Alderwood",
    "Alderville", "Alderfield", "Alderford", "Alderdale", "Alderport", "Alderhaven", "Alderburg",
    "Aldermont", "Aldershore", "Claywood", "Clayville", "Clayfield", "Clayford", "Claydale",
    "Clayport", "Clayhaven", "Clayburg", "Claymont", "Clayshore", "Millwood", "Millville",
    "Millfield", "Millford", "Milldale", "Millport", "Millhaven", "Millburg", "Millmont",
    "Millshore", "Foxwood", "Foxville", "Foxfield", "Foxford", "Foxdale", "Foxport", "Foxhaven",
    "Foxburg", "Foxmont", "Foxshore", "Cranewood", "Craneville", "Cranefield", "Craneford",
    "Cranedale", "Craneport", "Cranehaven", "Craneburg", "Cranemont", "Craneshore", "Heronwood",
    "Heronville", "Heronfield", "Heronford", "Herondale", "Heronport", "Heronhaven", "Heronburg",
    "Heronmont", "Heronshore", "Otterwood", "Otterville", "Otterfield", "Otterford", "Otterdale",
    "Otterport", "Otterhaven", "Otterburg", "Ottermont", "Ottershore", "Deerwood", "Deerville",
    "Deerfield", "Deerford", "Deerdale", "Deerport", "Deerhaven", "Deerburg", "Deermont",
    "Deershore", "Hazelwood", "Hazelville", "Hazelfield", "Hazelford", "Hazeldale", "Hazelport",
    "Hazelhaven", "Hazelburg", "Hazelmont", "Hazelshore", "Rowanwood", "Rowanville", "Rowanfield",
    "Rowanford", "Rowandale", "Rowanport", "Rowanhaven", "Rowanburg", "Rowanmont", "Rowanshore",
    "Briarwood", "Briarville", "Briarfield", "Briarford", "Briardale", "Briarport", "Briarhaven",
    "Briarburg", "Briarmont", "Briarshore"
};
const std::array<const char*, 39> kEventRoots = {
    "Harvest", "Lantern", "Solstice", "Meadow", "Orchard", "Harbor", "Beacon", "Prairie",
    "Garland", "Compass", "Anchor", "Ember", "Thistle", "Juniper", "Mariner", "Drover", "Quarry",
    "Falcon", "Heather", "Bellows", "Gleaner", "Tinker", "Wheelwright", "Saddler", "Glazier",
    "Currier", "Mercer", "Chandler", "Plover", "Kestrel", "Linnet", "Osprey", "Petrel",
    "Sandpiper", "Swallow", "Wagtail", "Bunting", "Siskin", "Tanager"
};

const std::array<const char*, 6> kOrgSuffixes = {
    "Labs", "Corp", "Group", "Systems", "Industries", "Institute",
};

const std::array<const char*, 4> kEventSuffixes = {
    "Festival", "Fair", "Summit", "Regatta",
};

// Lowercase stems; a capitalized token ending in one of these is treated as
// a place mention by the extractor.
const std::array<const char*, 10> kPlaceSuffixStems = {
    "wood", "ville", "field", "ford", "dale", "port", "haven", "burg", "mont", "shore",
};

const std::array<const char*, 16> kRoles = {
    "archivist", "surveyor", "bookkeeper", "typesetter", "botanist", "auditor",
    "conservator", "cartographer", "chandler", "glazier", "apiarist", "miller",
    "engraver", "clerk", "librarian", "steward",
};

// Every capitalized literal used by the document templates. The template
// audit test keeps this closed: rendered prose may not introduce a
// capitalized token outside this list, the pools, and the suffix tables.
const std::array<const char*, 35> kProseStopwords = {
    "The", "A", "An", "In", "On", "At", "By", "Of", "For",
    "After", "Before", "During", "He", "She", "It", "They",
    "His", "Her", "Their", "Its", "This", "That", "These", "Those",
    "Little", "Minutes", "Most", "Donations", "Neighbors", "Parcels",
    "Deliveries", "Records", "Visitors", "Letters", "Monthly",
};

template <std::size_t N>
bool contains(const std::array<const char*, N>& arr, std::string_view token) {
    return std::any_of(arr.begin(), arr.end(),
                       [&](const char* w) { return token == w; });
}

}  // namespace

std::span<const char* const> given_names() { return kGivenNames; }
std::span<const char* const> surnames() { return kSurnames; }
std::span<const char* const> org_roots() { return kOrgRoots; }
std::span<const char* const> place_names() { return kPlaceNames; }
std::span<const char* const> event_roots() { return kEventRoots; }
std::span<const char* const> org_suffixes() { return kOrgSuffixes; }
std::span<const char* const> event_suffixes() { return kEventSuffixes; }
std::span<const char* const> place_suffix_stems() { return kPlaceSuffixStems; }
std::span<const char* const> roles() { return kRoles; }
std::span<const char* const> prose_stopwords() { return kProseStopwords; }

bool is_org_suffix(std::string_view token) { return contains(kOrgSuffixes, token); }
bool is_event_suffix(std::string_view token) { return contains(kEventSuffixes, token); }

bool has_place_suffix(std::string_view token) {
    for (const char* stem : kPlaceSuffixStems) {
        std::string_view s(stem);
        if (token.size() > s.size() &&
            token.substr(token.size() - s.size()) == s)
            return true;
    }
    return false;
}

bool is_stopword(std::string_view token) { return contains(kProseStopwords, token); }

}  // namespace hopbench::pools
