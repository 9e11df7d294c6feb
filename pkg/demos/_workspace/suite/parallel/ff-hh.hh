hh071 hh079 hh079 hh071 hh030 hh050
hh070 hh077 hh070 hh070 hh024 hh054 hh070 hh070 hh070
hh070 hh079 hh084 hh149 hh027 hh062 hh040 hh070
hh071 hh072 hh071 hh070 hh070
hh071 hh070 hh076 hh071 hh070 hh071
hh078 hh056 hh035 hh034 hh071 hh126
hh070 hh070 hh086 hh041 hh055 hh073 hh071 hh070 hh070
hh039 hh026 hh054 hh070 hh078 hh070
hh149 hh073 hh070 hh041 hh055
hh070 hh072 hh070 hh041 hh058
hh071 hh071 hh030 hh050 hh070 hh070
hh073 hh072 hh056 hh035 hh034 hh073 hh070
hh070 hh070 hh107 hh073 hh070 hh077
hh070 hh071 hh077 hh070 hh070
hh071 hh149 hh074 hh070 hh070 hh070 hh149 hh076
hh070 hh056 hh035 hh034 hh149 hh071 hh072 hh076 hh071
hh070 hh073 hh070 hh089 hh071
hh041 hh058 hh070 hh096 hh070
hh082 hh149 hh074 hh079 hh110 hh092 hh101
hh042 hh058 hh038 hh070 hh072 hh076 hh071
hh070 hh070 hh087 hh128 hh076 hh076 hh071 hh048 hh062
hh070 hh072 hh048 hh062 hh070 hh070 hh070
hh085 hh070 hh070 hh089 hh071 hh072 hh071
hh039 hh026 hh054 hh072 hh070
hh070 hh072 hh070 hh070 hh070 hh072 hh070 hh072
hh149 hh072 hh149 hh027 hh062 hh040 hh071
hh076 hh105 hh119 hh149 hh048 hh062
hh149 hh070 hh074 hh070 hh090 hh070 hh041 hh055
hh072 hh149 hh041 hh058 hh070
hh070 hh089 hh048 hh062 hh149 hh071 hh070 hh103 hh071
hh072 hh070 hh071 hh074 hh030 hh050 hh071
hh070 hh070 hh070 hh100 hh071
hh024 hh054 hh071 hh072 hh070 hh070 hh070
hh072 hh070 hh064 hh056 hh070 hh070 hh070
hh072 hh070 hh070 hh070 hh131 hh070 hh070 hh073
hh071 hh070 hh072 hh082 hh070 hh070 hh076 hh070
hh039 hh026 hh054 hh070 hh070
hh074 hh070 hh078 hh071 hh070 hh070 hh070 hh084 hh149
hh071 hh070 hh073 hh070 hh070 hh070
hh071 hh079 hh070 hh077 hh149 hh070 hh089
hh082 hh143 hh072 hh070 hh071 hh079 hh070
hh077 hh071 hh070 hh072 hh070 hh072 hh149
hh070 hh070 hh149 hh070 hh070 hh070 hh070
hh072 hh070 hh064 hh056 hh082
hh070 hh070 hh027 hh062 hh040 hh071
hh070 hh070 hh070 hh070 hh070 hh070 hh048 hh062
hh070 hh070 hh071 hh070 hh070 hh075 hh056 hh035 hh034
hh027 hh062 hh040 hh072 hh070 hh087 hh070
hh073 hh149 hh070 hh070 hh070 hh149 hh070 hh149
hh070 hh070 hh070 hh070 hh149 hh120 hh064 hh056 hh076
hh071 hh075 hh097 hh091 hh076 hh070 hh073 hh074 hh074
hh073 hh070 hh072 hh070 hh070 hh070
hh072 hh077 hh073 hh048 hh062
hh064 hh056 hh071 hh071 hh070 hh071
hh076 hh070 hh072 hh027 hh062 hh040
hh070 hh070 hh039 hh026 hh054 hh070 hh071 hh081 hh070
hh072 hh070 hh070 hh070 hh088
hh082 hh027 hh062 hh040 hh133 hh129 hh070 hh071
hh039 hh026 hh054 hh076 hh070 hh072
hh070 hh072 hh070 hh075 hh071 hh070
hh030 hh050 hh083 hh070 hh070
hh073 hh070 hh039 hh026 hh054
hh075 hh070 hh077 hh149 hh117
hh070 hh048 hh062 hh091 hh070 hh070 hh078 hh075
hh048 hh062 hh070 hh070 hh149 hh072
hh074 hh070 hh149 hh070 hh071 hh024 hh054
hh070 hh071 hh075 hh030 hh050
hh070 hh144 hh071 hh071 hh094 hh071 hh071
hh070 hh072 hh070 hh071 hh056 hh035 hh034
hh070 hh149 hh074 hh070 hh064 hh056 hh075 hh070 hh070
hh048 hh062 hh070 hh071 hh070 hh070 hh073 hh149
hh148 hh039 hh026 hh054 hh072
hh070 hh070 hh070 hh071 hh070
hh070 hh071 hh089 hh097 hh071 hh149 hh070
hh073 hh089 hh140 hh070 hh072 hh116 hh077 hh149
hh070 hh082 hh071 hh070 hh071 hh070 hh084 hh070 hh077
hh070 hh070 hh042 hh058 hh038 hh149
hh070 hh070 hh070 hh041 hh058 hh070 hh080 hh070
hh070 hh083 hh070 hh073 hh079 hh073 hh071 hh070
hh070 hh071 hh079 hh070 hh149 hh024 hh054 hh074
hh070 hh074 hh071 hh076 hh126 hh071 hh070 hh071 hh073
hh070 hh149 hh075 hh070 hh070 hh070 hh072 hh070 hh071
hh080 hh070 hh149 hh070 hh123
hh079 hh071 hh070 hh076 hh070 hh084 hh074 hh070
hh073 hh071 hh071 hh070 hh070 hh027 hh062 hh040
hh078 hh077 hh070 hh070 hh070 hh073 hh048 hh062 hh087
hh070 hh048 hh062 hh070 hh073 hh078 hh070 hh083 hh071
hh070 hh070 hh149 hh085 hh071 hh071 hh085 hh070 hh070
hh056 hh035 hh034 hh070 hh070 hh070
hh070 hh073 hh070 hh072 hh149 hh097 hh070 hh070 hh070
hh078 hh100 hh075 hh070 hh072
hh070 hh101 hh064 hh056 hh078 hh070 hh086 hh070
hh041 hh058 hh070 hh106 hh070 hh071 hh070 hh070
hh074 hh074 hh070 hh064 hh056 hh072
hh070 hh076 hh070 hh071 hh064 hh056 hh080 hh075 hh073
hh070 hh070 hh070 hh070 hh089 hh070 hh030 hh050 hh071
hh027 hh062 hh040 hh079 hh070 hh070 hh070
hh075 hh071 hh071 hh073 hh071 hh072
hh042 hh058 hh038 hh073 hh070 hh071
hh149 hh070 hh070 hh075 hh039 hh026 hh054 hh070 hh070
hh042 hh058 hh038 hh070 hh078 hh070
hh070 hh072 hh064 hh056 hh072
hh149 hh027 hh062 hh040 hh075 hh076 hh075
hh070 hh071 hh070 hh070 hh070 hh070 hh113
hh064 hh056 hh072 hh070 hh071 hh071 hh071
hh077 hh071 hh070 hh071 hh075 hh070 hh072 hh100
hh149 hh088 hh073 hh070 hh149 hh070 hh071 hh075 hh071
hh074 hh024 hh054 hh070 hh070 hh070 hh070 hh072
hh076 hh149 hh074 hh076 hh070 hh074 hh041 hh055 hh071
hh070 hh070 hh070 hh086 hh073 hh070 hh082
hh094 hh073 hh070 hh070 hh071 hh070
hh071 hh074 hh070 hh071 hh083 hh072
hh070 hh074 hh070 hh070 hh070 hh149 hh090 hh111
hh072 hh071 hh149 hh070 hh071
hh071 hh074 hh070 hh064 hh056 hh071 hh070
hh082 hh115 hh070 hh073 hh075 hh073 hh070 hh141 hh149
hh070 hh070 hh070 hh070 hh070 hh070 hh070 hh030 hh050
hh070 hh070 hh075 hh149 hh070 hh041 hh058 hh097 hh070
hh073 hh070 hh071 hh072 hh041 hh058
hh027 hh062 hh040 hh070 hh071 hh070 hh070
hh095 hh072 hh072 hh071 hh071 hh091
hh107 hh071 hh092 hh117 hh070 hh105 hh070 hh070 hh073
hh073 hh070 hh070 hh064 hh056 hh071 hh070 hh070 hh073
hh070 hh072 hh071 hh074 hh071 hh074 hh071 hh134 hh080
hh070 hh070 hh070 hh070 hh086 hh081 hh071 hh078 hh070
hh071 hh048 hh062 hh070 hh121 hh075 hh070
hh071 hh070 hh072 hh056 hh035 hh034
hh075 hh071 hh070 hh070 hh075 hh089 hh070 hh149 hh070
hh072 hh072 hh071 hh071 hh070 hh070
hh048 hh062 hh070 hh070 hh070 hh075 hh149
hh070 hh070 hh070 hh070 hh080
hh070 hh076 hh070 hh070 hh088 hh072
hh071 hh070 hh149 hh070 hh070 hh070 hh071 hh149 hh071
hh048 hh062 hh071 hh070 hh070 hh076
hh071 hh070 hh070 hh071 hh076 hh070
hh070 hh070 hh077 hh042 hh058 hh038
hh070 hh072 hh072 hh070 hh075
hh126 hh070 hh072 hh071 hh070 hh042 hh058 hh038 hh070
hh073 hh089 hh074 hh106 hh075 hh076
hh030 hh050 hh071 hh149 hh070 hh076
hh070 hh070 hh070 hh118 hh082 hh030 hh050 hh073
hh074 hh081 hh070 hh041 hh058 hh073
hh129 hh070 hh089 hh072 hh071 hh074 hh081 hh071 hh079
hh039 hh026 hh054 hh071 hh070 hh070
hh070 hh070 hh070 hh073 hh070 hh070 hh070 hh070 hh123
hh070 hh071 hh071 hh070 hh070 hh149 hh070
hh149 hh131 hh106 hh070 hh070 hh070 hh070 hh084 hh072
hh070 hh070 hh070 hh070 hh104
hh087 hh070 hh070 hh071 hh104
hh070 hh073 hh071 hh074 hh061 hh044 hh065 hh078 hh071
hh096 hh070 hh072 hh078 hh073
hh070 hh077 hh075 hh081 hh071 hh073
hh071 hh070 hh027 hh048 hh149 hh095 hh072
hh070 hh070 hh035 hh057 hh038 hh149
hh149 hh077 hh070 hh071 hh071 hh071 hh070 hh071 hh070
hh072 hh070 hh053 hh062 hh071 hh070 hh072 hh074
hh071 hh072 hh070 hh127 hh071 hh072
hh070 hh073 hh079 hh096 hh071
hh086 hh070 hh070 hh070 hh070 hh070
hh070 hh073 hh070 hh070 hh071 hh091 hh030 hh050 hh070
hh070 hh070 hh071 hh070 hh071 hh083 hh071 hh108 hh071
hh071 hh070 hh070 hh071 hh043 hh037 hh149 hh075 hh071
hh074 hh071 hh070 hh070 hh124 hh070 hh070 hh070
hh076 hh073 hh071 hh070 hh070 hh071 hh070 hh072
hh070 hh076 hh070 hh076 hh072
hh072 hh035 hh057 hh038 hh072 hh070 hh079
hh041 hh055 hh074 hh075 hh071 hh070 hh070
hh061 hh044 hh065 hh070 hh070
hh048 hh062 hh149 hh077 hh070 hh070 hh070 hh070
hh073 hh149 hh034 hh037 hh060 hh076 hh070 hh073 hh070
hh082 hh072 hh072 hh086 hh071 hh070 hh070 hh070 hh071
hh149 hh071 hh042 hh058 hh038 hh071
hh070 hh072 hh072 hh070 hh039 hh026 hh054
hh071 hh071 hh073 hh070 hh070 hh070 hh127 hh070 hh070
hh053 hh062 hh070 hh072 hh070 hh149
hh110 hh071 hh079 hh070 hh080 hh070 hh070 hh074
hh071 hh070 hh072 hh071 hh075 hh070 hh070
hh070 hh070 hh070 hh070 hh070
hh070 hh149 hh071 hh070 hh149
hh030 hh050 hh072 hh070 hh074
hh070 hh071 hh071 hh149 hh070 hh082 hh071 hh074 hh080
hh070 hh104 hh071 hh070 hh072 hh082 hh070
hh070 hh074 hh080 hh088 hh070 hh070 hh081 hh070 hh078
hh041 hh058 hh070 hh070 hh074
hh073 hh070 hh090 hh125 hh075 hh071 hh076 hh070 hh070
hh072 hh070 hh074 hh072 hh070 hh070 hh072 hh072 hh070
hh070 hh070 hh075 hh084 hh070 hh072 hh070 hh027 hh048
hh072 hh070 hh071 hh071 hh041 hh055 hh070 hh071 hh070
hh073 hh120 hh071 hh071 hh039 hh026 hh054 hh120 hh070
hh070 hh027 hh062 hh040 hh127 hh070 hh071 hh070
hh072 hh070 hh080 hh075 hh070 hh070 hh070 hh070
hh070 hh027 hh062 hh040 hh075 hh103 hh149 hh072
hh149 hh061 hh044 hh065 hh149 hh070 hh144 hh071 hh070
hh070 hh071 hh061 hh044 hh065 hh070
hh071 hh074 hh070 hh070 hh070 hh071 hh070 hh115
hh070 hh149 hh070 hh080 hh071 hh148 hh070 hh070 hh070
hh070 hh070 hh070 hh070 hh082 hh072
hh070 hh070 hh070 hh071 hh082 hh081 hh149
hh070 hh070 hh070 hh070 hh071 hh072 hh070 hh085
hh070 hh070 hh070 hh070 hh070 hh070
hh070 hh071 hh149 hh075 hh070 hh099 hh077
hh070 hh073 hh072 hh070 hh070
hh070 hh070 hh070 hh074 hh117 hh034 hh037 hh060
hh043 hh037 hh070 hh143 hh077 hh072 hh071
hh061 hh044 hh065 hh073 hh071 hh070 hh073
hh149 hh071 hh098 hh072 hh070 hh070
hh071 hh071 hh070 hh149 hh070 hh070
hh070 hh070 hh149 hh071 hh149
hh082 hh070 hh024 hh054 hh070 hh078
hh070 hh076 hh071 hh073 hh086
hh074 hh070 hh076 hh070 hh114 hh070
hh072 hh071 hh073 hh070 hh071 hh149 hh070 hh071
hh070 hh080 hh070 hh071 hh075 hh080
hh072 hh070 hh071 hh070 hh070 hh149 hh071 hh030 hh050
hh082 hh073 hh149 hh070 hh070 hh095 hh070
hh042 hh058 hh038 hh072 hh079 hh070 hh070 hh074
hh070 hh070 hh078 hh071 hh073 hh070 hh070 hh071
hh071 hh127 hh070 hh086 hh070
hh070 hh070 hh070 hh070 hh070 hh071 hh070 hh070 hh070
hh077 hh107 hh027 hh048 hh071 hh070
hh070 hh097 hh070 hh073 hh070 hh071 hh149 hh071 hh075
hh073 hh042 hh058 hh038 hh074
hh070 hh070 hh041 hh058 hh070 hh070
hh070 hh070 hh089 hh070 hh070
hh035 hh057 hh038 hh071 hh070 hh070
hh071 hh070 hh071 hh070 hh070 hh093
hh149 hh041 hh058 hh072 hh070 hh086
hh070 hh070 hh075 hh077 hh071
hh070 hh070 hh070 hh071 hh070 hh070 hh070
hh128 hh048 hh062 hh078 hh070 hh073
hh070 hh070 hh070 hh070 hh075 hh097 hh070
hh070 hh142 hh072 hh070 hh070 hh149 hh103
hh070 hh027 hh062 hh040 hh070
hh070 hh075 hh073 hh070 hh053 hh062 hh070
hh071 hh071 hh070 hh145 hh070 hh070 hh070 hh070
hh070 hh073 hh071 hh070 hh070 hh071
hh071 hh070 hh070 hh070 hh070 hh070 hh041 hh058
hh070 hh072 hh098 hh065 hh047 hh040
hh070 hh083 hh071 hh108 hh070 hh070 hh070 hh070
hh070 hh149 hh041 hh058 hh081
hh095 hh087 hh070 hh071 hh070 hh074 hh075 hh073 hh070
hh073 hh070 hh070 hh070 hh080 hh071
hh075 hh076 hh070 hh070 hh081 hh088
hh070 hh071 hh041 hh058 hh070 hh070
hh149 hh088 hh070 hh027 hh048 hh070 hh070
hh070 hh072 hh070 hh071 hh149 hh070 hh074 hh070 hh149
hh070 hh070 hh149 hh070 hh070
hh077 hh149 hh070 hh070 hh071 hh149 hh149 hh070
hh072 hh070 hh070 hh070 hh070 hh075 hh070 hh070
hh149 hh105 hh074 hh085 hh070 hh070 hh070 hh073
hh070 hh071 hh070 hh070 hh072 hh073 hh149 hh070 hh070
hh073 hh070 hh071 hh070 hh071
hh149 hh070 hh073 hh071 hh043 hh037
hh070 hh039 hh026 hh054 hh070 hh070 hh094
hh070 hh070 hh071 hh070 hh053 hh062
hh071 hh089 hh071 hh071 hh102 hh091
hh077 hh072 hh070 hh070 hh070 hh064 hh056
hh070 hh149 hh074 hh071 hh070
hh070 hh072 hh070 hh070 hh078
hh070 hh041 hh058 hh070 hh075 hh070 hh070 hh072 hh070
hh070 hh071 hh149 hh027 hh048 hh149 hh072 hh074 hh070
hh072 hh107 hh070 hh071 hh111 hh149 hh075
hh102 hh070 hh070 hh070 hh070 hh081
hh070 hh056 hh035 hh034 hh149 hh070 hh075 hh070
hh070 hh071 hh071 hh070 hh070 hh071 hh070 hh071 hh078
hh071 hh070 hh076 hh070 hh053 hh062 hh070 hh070 hh070
hh071 hh070 hh072 hh070 hh071
hh070 hh070 hh071 hh078 hh070 hh070 hh072 hh075
hh070 hh071 hh070 hh077 hh027 hh048
hh071 hh071 hh070 hh070 hh071 hh072 hh070 hh080
hh082 hh149 hh070 hh070 hh070
hh070 hh074 hh071 hh070 hh070 hh073
hh071 hh070 hh071 hh070 hh070 hh070 hh070 hh071
hh071 hh070 hh070 hh075 hh070
hh070 hh071 hh070 hh070 hh070 hh041 hh058
hh070 hh070 hh061 hh044 hh065 hh070 hh095 hh070 hh071
hh149 hh070 hh097 hh070 hh076 hh071
hh070 hh043 hh037 hh072 hh070 hh070 hh149 hh070
hh116 hh149 hh071 hh071 hh070 hh070
hh079 hh070 hh072 hh070 hh070 hh070 hh071 hh070
