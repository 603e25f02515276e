/**
 * Response fixtures frozen from the planning service, so the UI tests
 * exercise exactly what it returns. Regenerate with the capture
 * commands in frontend/README.md after changing the service payloads.
 */

export const constants = {
  "chinchilla_slope": 0.9606,
  "chinchilla_intercept": 0.8981,
  "flops_factor": 6.0,
  "a100_flops_per_hour": 5.35701e+17,
  "price_reserved_usd_per_hour": 3.0,
  "price_on_demand_usd_per_hour": 5.0,
  "default_tokens_per_gb": 350000000.0,
  "dev_multiplier": 5.14,
  "words_per_token": 0.75,
  "hours_per_year": 8760.0
} as const;

export const defaultEstimate = {
  "tokens": 1553648074353.6438,
  "dataset_gb": 4438.994498153268,
  "flops": 6.059227489979211e+23,
  "gpu_hours": 1131083.8490089083,
  "wall_clock_hours": 1131083.8490089083,
  "usd": 3393251.5470267246,
  "project_usd": 3393251.5470267246,
  "project_gpu_hours": 1131083.8490089083,
  "usd_display": "$3.4M",
  "time_display": "129.1 years",
  "tokens_display": "1.6T",
  "dataset_display": "4.4TB",
  "project_usd_display": "$3.4M",
  "mode": "from_scratch",
  "model_params": 65000000000.0
} as const;

export const continued500 = {
  "tokens": 175000000000.0,
  "dataset_gb": 500.0,
  "flops": 6.825e+22,
  "gpu_hours": 127403.15959835803,
  "wall_clock_hours": 127403.15959835803,
  "usd": 382209.4787950741,
  "project_usd": 382209.4787950741,
  "project_gpu_hours": 127403.15959835803,
  "usd_display": "$382.2K",
  "time_display": "14.5 years",
  "tokens_display": "175.0B",
  "dataset_display": "500.0GB",
  "project_usd_display": "$382.2K",
  "mode": "continued_pretrain",
  "model_params": 65000000000.0
} as const;

export const pretrainTable = {
  "rows": [
    {
      "tokens": 30718118155.703403,
      "dataset_gb": 87.7660518734383,
      "flops": 2.7646306340133064e+20,
      "gpu_hours": 516.0771837299737,
      "wall_clock_hours": 516.0771837299737,
      "usd": 1548.2315511899212,
      "project_usd": 1548.2315511899212,
      "project_gpu_hours": 516.0771837299737,
      "usd_display": "$1.5K",
      "time_display": "21.5 days",
      "tokens_display": "30.7B",
      "dataset_display": "87.8GB",
      "project_usd_display": "$1.5K",
      "model_params": 1500000000.0,
      "params_display": "1.5B",
      "example_model": "GPT-2"
    },
    {
      "tokens": 152700827593.96112,
      "dataset_gb": 436.2880788398889,
      "flops": 6.413434758946367e+21,
      "gpu_hours": 11972.041790002942,
      "wall_clock_hours": 11972.041790002942,
      "usd": 35916.12537000883,
      "project_usd": 35916.12537000883,
      "project_gpu_hours": 11972.041790002942,
      "usd_display": "$35.9K",
      "time_display": "1.4 years",
      "tokens_display": "152.7B",
      "dataset_display": "436.3GB",
      "project_usd_display": "$35.9K",
      "model_params": 7000000000.0,
      "params_display": "7.0B",
      "example_model": "LLaMA-7B"
    },
    {
      "tokens": 290879872340.7825,
      "dataset_gb": 831.0853495450928,
      "flops": 2.268863004258103e+22,
      "gpu_hours": 42353.15977118025,
      "wall_clock_hours": 42353.15977118025,
      "usd": 127059.47931354077,
      "project_usd": 127059.47931354077,
      "project_gpu_hours": 42353.15977118025,
      "usd_display": "$127.1K",
      "time_display": "4.8 years",
      "tokens_display": "290.9B",
      "dataset_display": "831.1GB",
      "project_usd_display": "$127.1K",
      "model_params": 13000000000.0,
      "params_display": "13.0B",
      "example_model": "LLaMA-13B"
    },
    {
      "tokens": 767146200704.16,
      "dataset_gb": 2191.8462877261713,
      "flops": 1.518949477394237e+23,
      "gpu_hours": 283544.26767809596,
      "wall_clock_hours": 283544.26767809596,
      "usd": 850632.8030342879,
      "project_usd": 850632.8030342879,
      "project_gpu_hours": 283544.26767809596,
      "usd_display": "$850.6K",
      "time_display": "32.4 years",
      "tokens_display": "767.1B",
      "dataset_display": "2.2TB",
      "project_usd_display": "$850.6K",
      "model_params": 33000000000.0,
      "params_display": "33.0B",
      "example_model": "LLaMA-33B"
    },
    {
      "tokens": 1553648074353.6438,
      "dataset_gb": 4438.994498153268,
      "flops": 6.059227489979211e+23,
      "gpu_hours": 1131083.8490089083,
      "wall_clock_hours": 1131083.8490089083,
      "usd": 3393251.5470267246,
      "project_usd": 3393251.5470267246,
      "project_gpu_hours": 1131083.8490089083,
      "usd_display": "$3.4M",
      "time_display": "129.1 years",
      "tokens_display": "1.6T",
      "dataset_display": "4.4TB",
      "project_usd_display": "$3.4M",
      "model_params": 65000000000.0,
      "params_display": "65.0B",
      "example_model": "LLaMA-65B"
    },
    {
      "tokens": 4356315758121.65,
      "dataset_gb": 12446.616451776143,
      "flops": 4.5741315460277325e+24,
      "gpu_hours": 8538590.64296638,
      "wall_clock_hours": 8538590.64296638,
      "usd": 25615771.92889914,
      "project_usd": 25615771.92889914,
      "project_gpu_hours": 8538590.64296638,
      "usd_display": "$25.6M",
      "time_display": "974.7 years",
      "tokens_display": "4.4T",
      "dataset_display": "12.4TB",
      "project_usd_display": "$25.6M",
      "model_params": 175000000000.0,
      "params_display": "175.0B",
      "example_model": "GPT-3/ChatGPT"
    }
  ]
} as const;

export const continuedTable = {
  "model_sizes": [
    1500000000.0,
    7000000000.0,
    13000000000.0,
    33000000000.0,
    65000000000.0
  ],
  "model_displays": [
    "1.5B",
    "7.0B",
    "13.0B",
    "33.0B",
    "65.0B"
  ],
  "disk_sizes_gb": [
    20.0,
    100.0,
    500.0,
    1000.0,
    5000.0,
    10000.0
  ],
  "disk_displays": [
    "20.0GB",
    "100.0GB",
    "500.0GB",
    "1.0TB",
    "5.0TB",
    "10.0TB"
  ],
  "usd": [
    [
      352.8087496569915,
      1646.440831732627,
      3057.675830360593,
      7761.792492453813,
      15288.379151802965
    ],
    [
      1764.0437482849575,
      8232.204158663135,
      15288.379151802965,
      38808.96246226906,
      76441.89575901482
    ],
    [
      8820.218741424787,
      41161.02079331568,
      76441.89575901482,
      194044.81231134533,
      382209.4787950741
    ],
    [
      17640.437482849575,
      82322.04158663136,
      152883.79151802964,
      388089.62462269067,
      764418.9575901482
    ],
    [
      88202.18741424788,
      411610.20793315675,
      764418.9575901482,
      1940448.1231134532,
      3822094.787950741
    ],
    [
      176404.37482849575,
      823220.4158663135,
      1528837.9151802964,
      3880896.2462269063,
      7644189.575901482
    ]
  ],
  "usd_display": [
    [
      "$352.8",
      "$1.6K",
      "$3.1K",
      "$7.8K",
      "$15.3K"
    ],
    [
      "$1.8K",
      "$8.2K",
      "$15.3K",
      "$38.8K",
      "$76.4K"
    ],
    [
      "$8.8K",
      "$41.2K",
      "$76.4K",
      "$194.0K",
      "$382.2K"
    ],
    [
      "$17.6K",
      "$82.3K",
      "$152.9K",
      "$388.1K",
      "$764.4K"
    ],
    [
      "$88.2K",
      "$411.6K",
      "$764.4K",
      "$1.9M",
      "$3.8M"
    ],
    [
      "$176.4K",
      "$823.2K",
      "$1.5M",
      "$3.9M",
      "$7.6M"
    ]
  ]
} as const;

export const modelSweep = {
  "field": "model",
  "points": [
    {
      "value": 1500000000.0,
      "estimate": {
        "tokens": 30718118155.703403,
        "dataset_gb": 87.7660518734383,
        "flops": 2.7646306340133064e+20,
        "gpu_hours": 516.0771837299737,
        "wall_clock_hours": 516.0771837299737,
        "usd": 1548.2315511899212,
        "project_usd": 1548.2315511899212,
        "project_gpu_hours": 516.0771837299737,
        "usd_display": "$1.5K",
        "time_display": "21.5 days",
        "tokens_display": "30.7B",
        "dataset_display": "87.8GB",
        "project_usd_display": "$1.5K"
      },
      "error": null
    },
    {
      "value": 7000000000.0,
      "estimate": {
        "tokens": 152700827593.96112,
        "dataset_gb": 436.2880788398889,
        "flops": 6.413434758946367e+21,
        "gpu_hours": 11972.041790002942,
        "wall_clock_hours": 11972.041790002942,
        "usd": 35916.12537000883,
        "project_usd": 35916.12537000883,
        "project_gpu_hours": 11972.041790002942,
        "usd_display": "$35.9K",
        "time_display": "1.4 years",
        "tokens_display": "152.7B",
        "dataset_display": "436.3GB",
        "project_usd_display": "$35.9K"
      },
      "error": null
    },
    {
      "value": 13000000000.0,
      "estimate": {
        "tokens": 290879872340.7825,
        "dataset_gb": 831.0853495450928,
        "flops": 2.268863004258103e+22,
        "gpu_hours": 42353.15977118025,
        "wall_clock_hours": 42353.15977118025,
        "usd": 127059.47931354077,
        "project_usd": 127059.47931354077,
        "project_gpu_hours": 42353.15977118025,
        "usd_display": "$127.1K",
        "time_display": "4.8 years",
        "tokens_display": "290.9B",
        "dataset_display": "831.1GB",
        "project_usd_display": "$127.1K"
      },
      "error": null
    },
    {
      "value": 33000000000.0,
      "estimate": {
        "tokens": 767146200704.16,
        "dataset_gb": 2191.8462877261713,
        "flops": 1.518949477394237e+23,
        "gpu_hours": 283544.26767809596,
        "wall_clock_hours": 283544.26767809596,
        "usd": 850632.8030342879,
        "project_usd": 850632.8030342879,
        "project_gpu_hours": 283544.26767809596,
        "usd_display": "$850.6K",
        "time_display": "32.4 years",
        "tokens_display": "767.1B",
        "dataset_display": "2.2TB",
        "project_usd_display": "$850.6K"
      },
      "error": null
    },
    {
      "value": 65000000000.0,
      "estimate": {
        "tokens": 1553648074353.6438,
        "dataset_gb": 4438.994498153268,
        "flops": 6.059227489979211e+23,
        "gpu_hours": 1131083.8490089083,
        "wall_clock_hours": 1131083.8490089083,
        "usd": 3393251.5470267246,
        "project_usd": 3393251.5470267246,
        "project_gpu_hours": 1131083.8490089083,
        "usd_display": "$3.4M",
        "time_display": "129.1 years",
        "tokens_display": "1.6T",
        "dataset_display": "4.4TB",
        "project_usd_display": "$3.4M"
      },
      "error": null
    },
    {
      "value": 175000000000.0,
      "estimate": {
        "tokens": 4356315758121.65,
        "dataset_gb": 12446.616451776143,
        "flops": 4.5741315460277325e+24,
        "gpu_hours": 8538590.64296638,
        "wall_clock_hours": 8538590.64296638,
        "usd": 25615771.92889914,
        "project_usd": 25615771.92889914,
        "project_gpu_hours": 8538590.64296638,
        "usd_display": "$25.6M",
        "time_display": "974.7 years",
        "tokens_display": "4.4T",
        "dataset_display": "12.4TB",
        "project_usd_display": "$25.6M"
      },
      "error": null
    }
  ]
} as const;

export const epochsSweepWithError = {
  "field": "epochs",
  "points": [
    {
      "value": 1.0,
      "estimate": {
        "tokens": 1553648074353.6438,
        "dataset_gb": 4438.994498153268,
        "flops": 6.059227489979211e+23,
        "gpu_hours": 1131083.8490089083,
        "wall_clock_hours": 1131083.8490089083,
        "usd": 3393251.5470267246,
        "project_usd": 3393251.5470267246,
        "project_gpu_hours": 1131083.8490089083,
        "usd_display": "$3.4M",
        "time_display": "129.1 years",
        "tokens_display": "1.6T",
        "dataset_display": "4.4TB",
        "project_usd_display": "$3.4M"
      },
      "error": null
    },
    {
      "value": 0.5,
      "estimate": null,
      "error": "epochs must be >= 1, got 0.5"
    },
    {
      "value": 2.0,
      "estimate": {
        "tokens": 1553648074353.6438,
        "dataset_gb": 4438.994498153268,
        "flops": 1.2118454979958422e+24,
        "gpu_hours": 2262167.6980178165,
        "wall_clock_hours": 2262167.6980178165,
        "usd": 6786503.094053449,
        "project_usd": 6786503.094053449,
        "project_gpu_hours": 2262167.6980178165,
        "usd_display": "$6.8M",
        "time_display": "258.2 years",
        "tokens_display": "1.6T",
        "dataset_display": "4.4TB",
        "project_usd_display": "$6.8M"
      },
      "error": null
    },
    {
      "value": 4.0,
      "estimate": {
        "tokens": 1553648074353.6438,
        "dataset_gb": 4438.994498153268,
        "flops": 2.4236909959916845e+24,
        "gpu_hours": 4524335.396035633,
        "wall_clock_hours": 4524335.396035633,
        "usd": 13573006.188106898,
        "project_usd": 13573006.188106898,
        "project_gpu_hours": 4524335.396035633,
        "usd_display": "$13.6M",
        "time_display": "516.5 years",
        "tokens_display": "1.6T",
        "dataset_display": "4.4TB",
        "project_usd_display": "$13.6M"
      },
      "error": null
    }
  ]
} as const;

